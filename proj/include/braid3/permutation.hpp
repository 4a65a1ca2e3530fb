#pragma once

#include <string>
#include <vector>

namespace braid3 {

/// Permutation of {1..n}. Composition convention throughout the library is
/// word order: a.then(b) applies a first, then b.
class Permutation {
public:
  /// images[i] is the 1-based image of i+1.
  explicit Permutation(std::vector<int> images_one_based);

  static Permutation identity(int n);
  /// Swaps i and i+1 (1-based), the permutation of the generator sigma_i.
  static Permutation transposition(int n, int i);
  /// i -> n+1-i, the permutation of the half twist Delta.
  static Permutation half_twist(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  /// 1-based image of the 1-based point i.
  int image(int i) const { return img_[i - 1] + 1; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  /// Cycle lengths, sorted descending; fixed points count as 1-cycles.
  std::vector<int> cycle_type() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// One-line form, e.g. "[2 1 3]".
  std::string one_line() const;

private:
  std::vector<int> img_;  // 0-based images
};

}  // namespace braid3
