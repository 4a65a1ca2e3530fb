#pragma once

#include <cstdint>
#include <vector>

#include "braid3/word.hpp"

// Brute-force ground truth for equality in B_3, independent of the Garside
// engine. Words over {s1, s1^-1, s2, s2^-1} up to a length cap are nodes of a
// rewriting graph whose edges are free cancellations (with their inverses,
// free insertions) and the braid relation applied to subwords; union-find
// saturation yields equality classes. Every edge is a valid group identity,
// so two words in one class are provably equal; the cap only limits how much
// slack the connecting rewrite sequences may use.
class RewriteOracle {
 public:
  explicit RewriteOracle(int cap);

  int cap() const { return cap_; }
  std::size_t word_count() const { return parent_.size(); }

  /// Equality-class id of an encoded word (length <= cap).
  std::size_t class_of(const std::vector<std::uint8_t>& digits);

  /// Letter encoding: 0 = s1, 1 = s1^-1, 2 = s2, 3 = s2^-1.
  static std::vector<std::uint8_t> digits_of(const braid3::BraidWord& w);
  static braid3::BraidWord word_of(const std::vector<std::uint8_t>& digits);

 private:
  std::size_t index_of(const std::vector<std::uint8_t>& digits) const;
  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);

  int cap_;
  std::vector<std::uint64_t> offset_;  // offset_[k] = index of the first k-letter word
  std::vector<std::int32_t> parent_;
};

/// All freely reduced B_3 words of length <= max_len (including the empty
/// word), as oracle digit strings in enumeration order.
std::vector<std::vector<std::uint8_t>> freely_reduced_digit_words(int max_len);
