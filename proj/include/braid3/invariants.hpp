#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

/// Crossingless matching of 2n boundary points, stored as a mate array in
/// circle order: 0..n-1 run down the left side, n..2n-1 back up the right.
using PlanarPairing = std::vector<unsigned char>;

/// The loop value d = -A^2 - A^-2.
LaurentPolynomial tl_loop_value();

/// Element of the Temperley-Lieb algebra TL_n: a finite sum of planar
/// pairings with Laurent coefficients in A. Multiplication glues diagrams
/// and resolves each closed loop to a factor d.
class TLElement {
public:
  static TLElement zero(int strands);
  static TLElement identity(int strands);
  /// The cup-cap generator e_i, i in [1, n-1].
  static TLElement generator(int strands, int i);

  int strands() const { return strands_; }
  const std::map<PlanarPairing, LaurentPolynomial>& terms() const { return terms_; }

  TLElement operator*(const TLElement& rhs) const;
  TLElement& operator+=(const TLElement& rhs);
  TLElement scaled(const LaurentPolynomial& c) const;

private:
  explicit TLElement(int strands) : strands_(strands) {}
  void add_term(const PlanarPairing& p, const LaurentPolynomial& c);
  int strands_;
  std::map<PlanarPairing, LaurentPolynomial> terms_;
};

/// Kauffman bracket of the closed-braid diagram by the full 2^c state sum,
/// normalized so the unknot's bracket is 1 (d^(loops-1) per state). The
/// independent oracle for tl_bracket; words over 24 letters are rejected.
LaurentPolynomial kauffman_bracket(const BraidWord& w);

/// Same value as kauffman_bracket, computed by the TL transfer product
/// (linear in word length); strand counts above 4 are rejected.
LaurentPolynomial tl_bracket(const BraidWord& w);

/// Jones polynomial of the closure in q = t^(1/2): (-A)^(-3e) times the
/// bracket, re-expressed through t = A^-4. Link values have integer
/// q-exponents; knots land in even powers of q.
LaurentPolynomial jones(const BraidWord& w);

/// Small dense matrix of Laurent polynomials (dimension n-1 for B_n).
class BurauMatrix {
public:
  static BurauMatrix identity(int dim);
  BurauMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  LaurentPolynomial& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
  const LaurentPolynomial& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * dim_ + c];
  }
  BurauMatrix operator*(const BurauMatrix& rhs) const;
  LaurentPolynomial det() const;
  bool operator==(const BurauMatrix&) const = default;

private:
  int dim_;
  std::vector<LaurentPolynomial> e_;
};

/// Reduced Burau matrix of the word over Z[t, t^-1], with the convention
/// sigma1 -> [[-t,1],[0,1]], sigma2 -> [[1,0],[t,-t]] for B_3 and its
/// standard (n-1)-dimensional siblings for n = 2, 4. Other strand counts are
/// rejected.
BurauMatrix reduced_burau(const BraidWord& w);

/// Alexander polynomial of a 3-braid knot closure: det(burau - I) divided
/// exactly by 1 + t + t^2, normalized to lowest degree 0 with positive lowest
/// coefficient. Inexact division indicates a bug and throws std::logic_error.
LaurentPolynomial alexander(const BraidWord& w);

/// Topological-type fingerprint: component count and Jones always, plus
/// Alexander and determinant for 3-braid knot closures.
struct Fingerprint {
  int components = 0;
  LaurentPolynomial jones;
  std::optional<LaurentPolynomial> alexander;
  std::optional<std::int64_t> determinant;

  bool operator==(const Fingerprint&) const = default;
  /// "components=..;jones=..;alexander=..;det=.." with "-" for absent fields.
  std::string canonical_text() const;
  /// FNV-1a hash of canonical_text, as 16 hex digits.
  std::string id() const;
};

Fingerprint fingerprint(const BraidWord& w);

/// Canonical key built from reference-table fields; matches canonical_text.
std::string fingerprint_key(int components, const std::string& jones_text,
                            const std::string& alexander_text,
                            const std::string& determinant_text);

}  // namespace braid3
