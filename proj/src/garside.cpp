#include "braid3/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braid3 {

namespace {

// Starting set: j such that the simple p left-divides as sigma_j * rest,
// i.e. the strands starting at j, j+1 cross, i.e. p(j) > p(j+1).
bool starts_with(const Permutation& p, int j) { return p.image(j) > p.image(j + 1); }

// tau(p) = Delta^-1 p Delta; on permutations conjugation by the half twist.
Permutation tau(const Permutation& p) {
  const Permutation w0 = Permutation::half_twist(p.degree());
  return w0.then(p).then(w0);
}

// Make the pair (a, b) left-weighted by moving generators from the front of
// b to the back of a while possible. Returns true if anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  const int n = a.degree();
  bool moved = false;
  while (true) {
    const Permutation ainv = a.inverse();
    int j = 0;
    for (int i = 1; i < n; ++i) {
      if (starts_with(b, i) && !starts_with(ainv, i)) {  // i in S(b) \ F(a)
        j = i;
        break;
      }
    }
    if (j == 0) return moved;
    a = a.then(Permutation::transposition(n, j));
    // strip sigma_j from the front of b: b'(x) = b(t_j(x))
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[x - 1] = b.image(x);
    std::swap(img[j - 1], img[j]);
    b = Permutation(std::move(img));
    moved = true;
  }
}

std::vector<BraidLetter> letters_of_simple(const Permutation& perm) {
  const int n = perm.degree();
  std::vector<BraidLetter> out;
  Permutation p = perm;
  while (!p.is_identity()) {
    int j = 0;
    for (int i = 1; i < n; ++i) {
      if (starts_with(p, i)) {
        j = i;
        break;
      }
    }
    out.push_back({j, 1});
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[x - 1] = p.image(x);
    std::swap(img[j - 1], img[j]);
    p = Permutation(std::move(img));
  }
  return out;
}

// All permutations of {1..n} except the identity, in lexicographic order.
// Built fresh per call: callers may run on parallel workers, and the sets in
// play (n <= 4) are tiny.
std::vector<Permutation> nontrivial_simples(int n) {
  std::vector<Permutation> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  while (std::next_permutation(img.begin(), img.end())) out.push_back(Permutation(img));
  return out;
}

GarsideNormalForm conjugated_form(const GarsideNormalForm& f, const BraidWord& c) {
  return normal_form(concat(concat(inverse(c), f.to_word()), c));
}

bool lex_better(const GarsideNormalForm& a, const GarsideNormalForm& b) {
  return a.inf() > b.inf() || (a.inf() == b.inf() && a.sup() < b.sup());
}

}  // namespace

GarsideNormalForm::GarsideNormalForm(int strands, int inf, std::vector<Permutation> factors)
    : strands_(strands), inf_(inf), factors_(std::move(factors)) {
  const Permutation w0 = Permutation::half_twist(strands_);
  for (const auto& f : factors_) {
    if (f.degree() != strands_) throw std::invalid_argument("normal form: factor degree mismatch");
    if (f.is_identity() || f == w0)
      throw std::invalid_argument("normal form: trivial or Delta factor");
  }
}

BraidWord GarsideNormalForm::to_word() const {
  std::vector<BraidLetter> letters;
  const auto delta = letters_of_simple(Permutation::half_twist(strands_));
  if (inf_ >= 0) {
    for (int i = 0; i < inf_; ++i) letters.insert(letters.end(), delta.begin(), delta.end());
  } else {
    std::vector<BraidLetter> delta_inv(delta.rbegin(), delta.rend());
    for (auto& l : delta_inv) l.sign = -1;
    for (int i = 0; i < -inf_; ++i)
      letters.insert(letters.end(), delta_inv.begin(), delta_inv.end());
  }
  for (const auto& f : factors_) {
    const auto fw = letters_of_simple(f);
    letters.insert(letters.end(), fw.begin(), fw.end());
  }
  return BraidWord(strands_, std::move(letters));
}

std::string GarsideNormalForm::key() const {
  std::string k = std::to_string(strands_) + "|" + std::to_string(inf_);
  for (const auto& f : factors_) {
    k += "|";
    for (int i = 1; i <= strands_; ++i) k += static_cast<char>('0' + f.image(i));
  }
  return k;
}

std::string GarsideNormalForm::display() const {
  std::string s = "D^" + std::to_string(inf_);
  for (const auto& f : factors_) s += " . " + f.one_line();
  return s;
}

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  const Permutation w0 = Permutation::half_twist(n);
  int p = 0;
  std::vector<Permutation> fs;
  fs.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      fs.push_back(Permutation::transposition(n, l.index));
    } else {
      // sigma_i^-1 = Delta^-1 * s with s * sigma_i = Delta; pulling Delta^-1
      // to the front conjugates every accumulated factor by the half twist.
      for (auto& f : fs) f = tau(f);
      --p;
      fs.push_back(w0.then(Permutation::transposition(n, l.index)));
    }
  }
  bool changed = !fs.empty();
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < fs.size(); ++j)
      if (left_weight_pair(fs[j], fs[j + 1])) changed = true;
  }
  std::size_t lo = 0, hi = fs.size();
  while (lo < hi && fs[lo] == w0) {
    ++lo;
    ++p;
  }
  while (hi > lo && fs[hi - 1].is_identity()) --hi;
  return GarsideNormalForm(n, p,
                           std::vector<Permutation>(fs.begin() + lo, fs.begin() + hi));
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("words_equal: strand count mismatch");
  return normal_form(a) == normal_form(b);
}

BraidWord simple_factor_word(const Permutation& p) {
  return BraidWord(p.degree(), letters_of_simple(p));
}

GarsideNormalForm cycling(const GarsideNormalForm& f) {
  if (f.canonical_length() == 0) return f;
  Permutation iota = f.factors().front();
  if (((f.inf() % 2) + 2) % 2 == 1) iota = tau(iota);
  return conjugated_form(f, simple_factor_word(iota));
}

GarsideNormalForm decycling(const GarsideNormalForm& f) {
  if (f.canonical_length() == 0) return f;
  const BraidWord tail = simple_factor_word(f.factors().back());
  return normal_form(concat(concat(tail, f.to_word()), inverse(tail)));
}

GarsideNormalForm summit_representative(const GarsideNormalForm& f) {
  GarsideNormalForm best = f;
  bool improved = true;
  int rounds = 0;
  while (improved) {
    improved = false;
    for (auto* op : {&cycling, &decycling}) {
      std::set<std::string> seen;
      GarsideNormalForm x = best;
      while (seen.insert(x.key()).second) {
        x = (*op)(x);
        if (lex_better(x, best)) {
          best = x;
          improved = true;
          break;
        }
      }
    }
    if (++rounds > 4096) throw std::logic_error("summit search did not stabilize");
  }
  return best;
}

std::vector<GarsideNormalForm> super_summit_set(const BraidWord& w) {
  const GarsideNormalForm s = summit_representative(normal_form(w));
  const int target_inf = s.inf();
  const int target_sup = s.sup();
  const auto simples = nontrivial_simples(w.strands());
  std::map<std::string, GarsideNormalForm> found;
  std::deque<GarsideNormalForm> todo;
  found.emplace(s.key(), s);
  todo.push_back(s);
  while (!todo.empty()) {
    const GarsideNormalForm x = todo.front();
    todo.pop_front();
    for (const auto& sp : simples) {
      const GarsideNormalForm z = conjugated_form(x, simple_factor_word(sp));
      if (z.inf() != target_inf || z.sup() != target_sup) continue;
      if (found.emplace(z.key(), z).second) todo.push_back(z);
    }
  }
  std::vector<GarsideNormalForm> out;
  out.reserve(found.size());
  for (auto& [key, nf] : found) out.push_back(std::move(nf));
  return out;
}

bool conjugate_test(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("conjugate_test: strand count mismatch");
  if (exponent_sum(a) != exponent_sum(b)) return false;
  if (permutation_of(a).cycle_type() != permutation_of(b).cycle_type()) return false;
  const GarsideNormalForm na = normal_form(a);
  const GarsideNormalForm nb = normal_form(b);
  if (na == nb) return true;
  const GarsideNormalForm sa = summit_representative(na);
  const GarsideNormalForm sb = summit_representative(nb);
  if (sa.inf() != sb.inf() || sa.sup() != sb.sup()) return false;
  const std::string wanted = sa.key();
  if (wanted == sb.key()) return true;
  // Closure of b's super summit set, with early exit on a's representative.
  const auto simples = nontrivial_simples(a.strands());
  std::set<std::string> found{sb.key()};
  std::deque<GarsideNormalForm> todo{sb};
  while (!todo.empty()) {
    const GarsideNormalForm x = todo.front();
    todo.pop_front();
    for (const auto& sp : simples) {
      const GarsideNormalForm z = conjugated_form(x, simple_factor_word(sp));
      if (z.inf() != sa.inf() || z.sup() != sa.sup()) continue;
      const std::string k = z.key();
      if (k == wanted) return true;
      if (found.insert(k).second) todo.push_back(z);
    }
  }
  return false;
}

}  // namespace braid3
