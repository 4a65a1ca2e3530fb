#pragma once

#include <string>
#include <vector>

#include "braid3/permutation.hpp"
#include "braid3/word.hpp"

namespace braid3 {

/// Left-weighted Garside normal form Delta^inf . F1 ... Fk in the classical
/// Garside structure on B_n (Delta = half twist, simple elements = permutation
/// braids). Factors are stored as permutations, each != identity and != Delta,
/// with every adjacent pair left-weighted: the starting set of F_{i+1} is
/// contained in the finishing set of F_i. Two words are equal in B_n iff
/// their normal forms are identical, which makes key() a total equality test.
class GarsideNormalForm {
public:
  GarsideNormalForm(int strands, int inf, std::vector<Permutation> factors);

  int strands() const { return strands_; }
  int inf() const { return inf_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  int sup() const { return inf_ + canonical_length(); }
  const std::vector<Permutation>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  /// A word representing this element: Delta^inf followed by the factors,
  /// each expanded through a fixed canonical generator ordering.
  BraidWord to_word() const;

  /// Compact canonical encoding, usable as an equality/hash key.
  std::string key() const;
  /// Human form "D^p . [2 1 3] . [3 1 2]".
  std::string display() const;

  bool operator==(const GarsideNormalForm&) const = default;

private:
  int strands_;
  int inf_;
  std::vector<Permutation> factors_;
};

/// Left-greedy normal form of a word; the entry point of all word and
/// conjugacy decisions.
GarsideNormalForm normal_form(const BraidWord& w);

/// True iff the words are equal as elements of B_n.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// Conjugate by the initial factor; leaves canonical length 0 inputs alone.
GarsideNormalForm cycling(const GarsideNormalForm& f);
/// Conjugate by the final factor; leaves canonical length 0 inputs alone.
GarsideNormalForm decycling(const GarsideNormalForm& f);

/// Iterated cycling/decycling until inf is maximal and then sup minimal over
/// the conjugacy class: an element of the super summit set.
GarsideNormalForm summit_representative(const GarsideNormalForm& f);

/// The full super summit set: all conjugates with maximal inf and, among
/// those, minimal sup. Closure under conjugation by simple elements; the
/// result is sorted by key and independent of exploration order.
std::vector<GarsideNormalForm> super_summit_set(const BraidWord& w);

/// Complete conjugacy decision in B_n, with cheap exponent-sum and
/// cycle-type short circuits before any summit computation.
bool conjugate_test(const BraidWord& a, const BraidWord& b);

/// A word for a single permutation braid (used by tests and the CLI).
BraidWord simple_factor_word(const Permutation& p);

}  // namespace braid3
