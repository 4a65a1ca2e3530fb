#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace braid3 {

/// Exact Laurent polynomial over the integers, stored sparsely as
/// exponent -> coefficient with no zero entries kept.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;

  static LaurentPolynomial constant(std::int64_t c);
  static LaurentPolynomial monomial(std::int64_t c, int exponent);
  /// Parse the canonical text form produced by text(). Throws on malformed
  /// input or on a variable other than `variable`.
  static LaurentPolynomial parse(std::string_view s, std::string_view variable);

  bool is_zero() const { return coeff_.empty(); }
  int min_exponent() const;  // throws std::domain_error on the zero polynomial
  int max_exponent() const;
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return coeff_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  bool operator==(const LaurentPolynomial&) const = default;

  /// Multiply by x^shift.
  LaurentPolynomial shifted(int shift) const;
  /// Substitute x -> x^k (k nonzero, may be negative).
  LaurentPolynomial exponents_scaled(int k) const;
  /// Divide every exponent by d (d nonzero, may be negative); nullopt if some
  /// exponent is not divisible.
  std::optional<LaurentPolynomial> exponents_divided(int d) const;
  /// Evaluate at x = +1 or x = -1, the only points the library needs exactly.
  std::int64_t evaluate_at_unit(int x) const;
  /// Exact division in Z[x, x^-1]; nullopt when no exact quotient exists.
  std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& divisor) const;

  /// Canonical text: ascending exponents, terms joined by " + " / " - ",
  /// unit coefficients and x^0 / x^1 abbreviated, e.g. "-q^-8 + q^-6 + 2".
  std::string text(std::string_view variable) const;

private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> coeff_;
};

}  // namespace braid3
