#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braid3/permutation.hpp"

namespace braid3 {

/// One letter sigma_index^sign of a braid word, index >= 1, sign = +1 or -1.
struct BraidLetter {
  int index;
  int sign;
  bool operator==(const BraidLetter&) const = default;
};

/// A word in the braid group B_n: explicit strand count plus a letter
/// sequence. Values are immutable after construction; all operations below
/// are pure functions returning new words.
class BraidWord {
public:
  BraidWord() : strands_(2) {}
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// Parses either the syllable form "s1^3 s2^-2" or the compact signed
  /// integer form "1 1 -2" (k means sigma_|k| with the sign of k). The strand
  /// count is max index + 1 unless overridden; an override below that is an
  /// error.
  static BraidWord parse(std::string_view text, std::optional<int> strands_override = std::nullopt);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  const BraidLetter& operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const BraidWord&) const = default;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Canonical syllable text, e.g. "s1^3 s2^-2"; the empty word prints as "".
std::string syllable_text(const BraidWord& w);

/// Deletes adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Product of the transpositions (i, i+1), in word order, sign-independent.
Permutation permutation_of(const BraidWord& w);

/// Number of components of the closed braid = cycles of permutation_of.
int component_count(const BraidWord& w);

/// Sum of letter signs (the word's exponent sum, a conjugacy invariant).
int exponent_sum(const BraidWord& w);

/// Self-linking number of the closure: exponent sum minus strand count.
int self_linking(const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// Moves the first k letters (mod length) to the back: a conjugation.
BraidWord cyclic_rotate(const BraidWord& w, int k);
/// Same letters viewed in B_strands (used for Markov stabilization tests).
BraidWord with_strands(const BraidWord& w, int strands);

}  // namespace braid3
