#include "braid3/invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braid3 {

namespace {

PlanarPairing identity_pairing(int n) {
  PlanarPairing m(2 * n);
  for (int i = 0; i < n; ++i) {
    m[i] = static_cast<unsigned char>(2 * n - 1 - i);
    m[2 * n - 1 - i] = static_cast<unsigned char>(i);
  }
  return m;
}

PlanarPairing cupcap_pairing(int n, int i) {
  PlanarPairing m = identity_pairing(n);
  const int a = i - 1, b = i;                          // left heights
  const int c = 2 * n - 1 - a, d = 2 * n - 1 - b;      // right heights
  m[a] = static_cast<unsigned char>(b);
  m[b] = static_cast<unsigned char>(a);
  m[c] = static_cast<unsigned char>(d);
  m[d] = static_cast<unsigned char>(c);
  return m;
}

// Glue Q's left boundary onto P's right boundary. Returns the composite
// pairing and the number of interior loops created.
std::pair<PlanarPairing, int> glue(const PlanarPairing& P, const PlanarPairing& Q, int n) {
  const int two_n = 2 * n;
  PlanarPairing out(two_n, 255);
  std::vector<char> seen_height(n, 0);
  // Walks alternate sides; interface height h is P index 2n-1-h = Q index h.
  auto walk_to_terminal = [&](bool in_p, int idx) {
    while (true) {
      if (in_p) {
        const int j = P[idx];
        if (j < n) return j;  // composite left point
        const int h = two_n - 1 - j;
        seen_height[h] = 1;
        in_p = false;
        idx = h;
      } else {
        const int j = Q[idx];
        if (j >= n) return j;  // composite right point
        seen_height[j] = 1;
        in_p = true;
        idx = two_n - 1 - j;
      }
    }
  };
  for (int c = 0; c < two_n; ++c) {
    if (out[c] != 255) continue;
    const int t = walk_to_terminal(c < n, c);
    out[c] = static_cast<unsigned char>(t);
    out[t] = static_cast<unsigned char>(c);
  }
  int loops = 0;
  for (int h = 0; h < n; ++h) {
    if (seen_height[h]) continue;
    ++loops;
    bool in_p = true;
    int idx = two_n - 1 - h;
    do {
      if (in_p) {
        const int j = P[idx];
        const int h2 = two_n - 1 - j;
        seen_height[h2] = 1;
        in_p = false;
        idx = h2;
      } else {
        const int j = Q[idx];
        seen_height[j] = 1;
        in_p = true;
        idx = two_n - 1 - j;
      }
    } while (!(in_p && idx == two_n - 1 - h));
  }
  return {out, loops};
}

int closure_loops(const PlanarPairing& m, int n) {
  const int two_n = 2 * n;
  std::vector<char> vis(two_n, 0);
  int loops = 0;
  for (int s = 0; s < two_n; ++s) {
    if (vis[s]) continue;
    ++loops;
    int x = s;
    do {
      vis[x] = 1;
      const int y = m[x];
      vis[y] = 1;
      x = two_n - 1 - y;  // closure arc to the same height on the other side
    } while (x != s);
  }
  return loops;
}

struct Dsu {
  std::vector<int> parent;
  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

LaurentPolynomial burau_entry_grid(int n, int i, int sign, int r, int c) {
  // Row i (1-based) of the generator matrix; everything else is identity.
  const int dim = n - 1;
  if (r != i) return LaurentPolynomial::constant(r == c ? 1 : 0);
  if (sign > 0) {
    if (c == i - 1 && i - 1 >= 1) return LaurentPolynomial::monomial(1, 1);   // t
    if (c == i) return LaurentPolynomial::monomial(-1, 1);                    // -t
    if (c == i + 1 && i + 1 <= dim) return LaurentPolynomial::constant(1);    // 1
  } else {
    if (c == i - 1 && i - 1 >= 1) return LaurentPolynomial::constant(1);      // 1
    if (c == i) return LaurentPolynomial::monomial(-1, -1);                   // -t^-1
    if (c == i + 1 && i + 1 <= dim) return LaurentPolynomial::monomial(1, -1);  // t^-1
  }
  return LaurentPolynomial();
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

LaurentPolynomial tl_loop_value() {
  return LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
}

TLElement TLElement::zero(int strands) { return TLElement(strands); }

TLElement TLElement::identity(int strands) {
  TLElement e(strands);
  e.terms_[identity_pairing(strands)] = LaurentPolynomial::constant(1);
  return e;
}

TLElement TLElement::generator(int strands, int i) {
  if (i < 1 || i >= strands) throw std::invalid_argument("TLElement::generator: bad index");
  TLElement e(strands);
  e.terms_[cupcap_pairing(strands, i)] = LaurentPolynomial::constant(1);
  return e;
}

void TLElement::add_term(const PlanarPairing& p, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement TLElement::operator*(const TLElement& rhs) const {
  if (strands_ != rhs.strands_) throw std::invalid_argument("TLElement: strand mismatch");
  const LaurentPolynomial d = tl_loop_value();
  TLElement out(strands_);
  for (const auto& [p, cp] : terms_) {
    for (const auto& [q, cq] : rhs.terms_) {
      auto [r, loops] = glue(p, q, strands_);
      LaurentPolynomial c = cp * cq;
      for (int i = 0; i < loops; ++i) c = c * d;
      out.add_term(r, c);
    }
  }
  return out;
}

TLElement& TLElement::operator+=(const TLElement& rhs) {
  if (strands_ != rhs.strands_) throw std::invalid_argument("TLElement: strand mismatch");
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

TLElement TLElement::scaled(const LaurentPolynomial& c) const {
  TLElement out(strands_);
  for (const auto& [p, cp] : terms_) out.add_term(p, cp * c);
  return out;
}

LaurentPolynomial kauffman_bracket(const BraidWord& w) {
  if (w.size() > 24)
    throw std::invalid_argument("kauffman_bracket: word too long for the state-sum oracle");
  const int n = w.strands();
  const int c = static_cast<int>(w.size());
  const LaurentPolynomial d = tl_loop_value();
  std::vector<LaurentPolynomial> d_pow(n + c + 1);
  d_pow[0] = LaurentPolynomial::constant(1);
  for (std::size_t i = 1; i < d_pow.size(); ++i) d_pow[i] = d_pow[i - 1] * d;

  LaurentPolynomial total;
  Dsu dsu;
  std::vector<int> cur(n);
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    int segs = n;
    dsu.reset(n + 2 * c);
    std::iota(cur.begin(), cur.end(), 0);
    int exp_a = 0;
    for (int k = 0; k < c; ++k) {
      const bool a_smoothing = ((state >> k) & 1u) == 0;
      exp_a += a_smoothing ? 1 : -1;
      const bool cupcap = (w[k].sign > 0) ? !a_smoothing : a_smoothing;
      if (cupcap) {
        const int i = w[k].index - 1;
        dsu.unite(cur[i], cur[i + 1]);
        cur[i] = segs++;
        cur[i + 1] = segs++;
        dsu.unite(cur[i], cur[i + 1]);
      }
    }
    for (int j = 0; j < n; ++j) dsu.unite(cur[j], j);
    int loops = 0;
    for (int s = 0; s < segs; ++s)
      if (dsu.find(s) == s) ++loops;
    total += LaurentPolynomial::monomial(1, exp_a) * d_pow[loops - 1];
  }
  return total;
}

LaurentPolynomial tl_bracket(const BraidWord& w) {
  const int n = w.strands();
  if (n > 4) throw std::invalid_argument("tl_bracket: at most 4 strands supported");
  TLElement acc = TLElement::identity(n);
  for (const auto& l : w.letters()) {
    TLElement step = TLElement::identity(n).scaled(LaurentPolynomial::monomial(1, l.sign));
    step += TLElement::generator(n, l.index).scaled(LaurentPolynomial::monomial(1, -l.sign));
    acc = acc * step;
  }
  const LaurentPolynomial d = tl_loop_value();
  LaurentPolynomial out;
  for (const auto& [p, c] : acc.terms()) {
    const int loops = closure_loops(p, n);
    LaurentPolynomial v = c;
    for (int i = 1; i < loops; ++i) v = v * d;
    out += v;
  }
  return out;
}

LaurentPolynomial jones(const BraidWord& w) {
  const LaurentPolynomial br = tl_bracket(w);
  const int e = exponent_sum(w);
  LaurentPolynomial v = br.shifted(-3 * e);
  if (e % 2 != 0) v = -v;
  const auto q = v.exponents_divided(-2);  // q = A^-2
  if (!q) throw std::logic_error("jones: odd bracket exponent after writhe correction");
  return *q;
}

BurauMatrix BurauMatrix::identity(int dim) {
  BurauMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPolynomial::constant(1);
  return m;
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("BurauMatrix: dimension mismatch");
  BurauMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      LaurentPolynomial s;
      for (int k = 0; k < dim_; ++k) s += at(r, k) * rhs.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

LaurentPolynomial BurauMatrix::det() const {
  switch (dim_) {
    case 1:
      return at(0, 0);
    case 2:
      return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    case 3:
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    default:
      throw std::invalid_argument("BurauMatrix::det: dimension above 3");
  }
}

BurauMatrix reduced_burau(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2 || n > 4)
    throw std::invalid_argument("reduced_burau: strand counts 2, 3, 4 supported");
  const int dim = n - 1;
  BurauMatrix acc = BurauMatrix::identity(dim);
  for (const auto& l : w.letters()) {
    BurauMatrix g(dim);
    for (int r = 1; r <= dim; ++r)
      for (int c = 1; c <= dim; ++c) g.at(r - 1, c - 1) = burau_entry_grid(n, l.index, l.sign, r, c);
    acc = acc * g;
  }
  return acc;
}

LaurentPolynomial alexander(const BraidWord& w) {
  if (w.strands() != 3) throw std::invalid_argument("alexander: 3-strand words only");
  if (component_count(w) != 1)
    throw std::invalid_argument("alexander: closure is not a knot");
  BurauMatrix m = reduced_burau(w);
  const BurauMatrix id = BurauMatrix::identity(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m.at(r, c) -= id.at(r, c);
  const LaurentPolynomial divisor = LaurentPolynomial::constant(1) +
                                    LaurentPolynomial::monomial(1, 1) +
                                    LaurentPolynomial::monomial(1, 2);
  const auto q = m.det().exact_div(divisor);
  if (!q || q->is_zero())
    throw std::logic_error("alexander: det(burau - I) not exactly divisible by 1+t+t^2");
  LaurentPolynomial norm = q->shifted(-q->min_exponent());
  if (norm.coefficient(0) < 0) norm = -norm;
  return norm;
}

std::string Fingerprint::canonical_text() const {
  std::string s = "components=" + std::to_string(components);
  s += ";jones=" + jones.text("q");
  s += ";alexander=" + (alexander ? alexander->text("t") : std::string("-"));
  s += ";det=" + (determinant ? std::to_string(*determinant) : std::string("-"));
  return s;
}

std::string Fingerprint::id() const {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(canonical_text());
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Fingerprint fingerprint(const BraidWord& w) {
  Fingerprint fp;
  fp.components = component_count(w);
  fp.jones = jones(w);
  if (fp.components == 1 && w.strands() == 3) {
    fp.alexander = alexander(w);
    fp.determinant = std::llabs(fp.alexander->evaluate_at_unit(-1));
  }
  return fp;
}

std::string fingerprint_key(int components, const std::string& jones_text,
                            const std::string& alexander_text,
                            const std::string& determinant_text) {
  return "components=" + std::to_string(components) + ";jones=" + jones_text +
         ";alexander=" + alexander_text + ";det=" + determinant_text;
}

}  // namespace braid3
