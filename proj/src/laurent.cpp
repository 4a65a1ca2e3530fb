#include "braid3/laurent.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace braid3 {

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t c, int exponent) {
  LaurentPolynomial p;
  if (c != 0) p.coeff_[exponent] = c;
  return p;
}

int LaurentPolynomial::min_exponent() const {
  if (coeff_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (coeff_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return coeff_.rbegin()->first;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = coeff_.find(exponent);
  return it == coeff_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeff_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeff_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.coeff_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.coeff_)
    for (const auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : coeff_) r.coeff_[e + shift] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::exponents_scaled(int k) const {
  if (k == 0) throw std::invalid_argument("exponents_scaled: zero scale");
  LaurentPolynomial r;
  for (const auto& [e, c] : coeff_) r.coeff_[e * k] = c;
  return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::exponents_divided(int d) const {
  if (d == 0) throw std::invalid_argument("exponents_divided: zero divisor");
  LaurentPolynomial r;
  for (const auto& [e, c] : coeff_) {
    if (e % d != 0) return std::nullopt;
    r.coeff_[e / d] = c;
  }
  return r;
}

std::int64_t LaurentPolynomial::evaluate_at_unit(int x) const {
  if (x != 1 && x != -1) throw std::invalid_argument("evaluate_at_unit: x must be +1 or -1");
  std::int64_t v = 0;
  for (const auto& [e, c] : coeff_) v += (x == 1 || e % 2 == 0) ? c : -c;
  return v;
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_div(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  LaurentPolynomial quot;
  if (is_zero()) return quot;
  const int d_lo = divisor.min_exponent();
  const std::int64_t d_c = divisor.coefficient(d_lo);
  // An exact quotient has span(this) - span(divisor) + 1 terms at most; use
  // that as the runaway guard (inexact division grows the remainder forever).
  const long max_terms =
      (long(max_exponent()) - min_exponent()) - (long(divisor.max_exponent()) - d_lo) + 1;
  if (max_terms < 1) return std::nullopt;
  LaurentPolynomial rem = *this;
  long emitted = 0;
  while (!rem.is_zero()) {
    const int e = rem.min_exponent();
    const std::int64_t c = rem.coefficient(e);
    if (c % d_c != 0) return std::nullopt;
    if (++emitted > max_terms) return std::nullopt;
    const LaurentPolynomial term = monomial(c / d_c, e - d_lo);
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

std::string LaurentPolynomial::text(std::string_view variable) const {
  if (coeff_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += std::to_string(mag);
      out += "*";
    }
    out += variable;
    if (e != 1) {
      out += "^";
      out += std::to_string(e);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view s, std::string_view variable) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("LaurentPolynomial::parse: malformed polynomial '" + std::string(s) + "'");
  };
  LaurentPolynomial r;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  skip_ws();
  if (i == s.size()) fail();
  if (s.substr(i) == "0") return r;
  int sign = 1;
  if (s[i] == '-') {
    sign = -1;
    ++i;
  }
  while (true) {
    skip_ws();
    std::int64_t mag = 1;
    bool have_digits = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      mag = std::strtoll(std::string(s.substr(start, i - start)).c_str(), nullptr, 10);
      have_digits = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int exponent = 0;
    if (i < s.size() && s.compare(i, variable.size(), variable) == 0) {
      i += variable.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail();
        exponent = std::atoi(std::string(s.substr(start, i - start)).c_str());
      }
    } else if (!have_digits) {
      fail();
    }
    r.add_term(exponent, sign * mag);
    skip_ws();
    if (i == s.size()) break;
    if (s[i] == '+') {
      sign = 1;
    } else if (s[i] == '-') {
      sign = -1;
    } else {
      fail();
    }
    ++i;
  }
  return r;
}

}  // namespace braid3
