#include "braid3/flype.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

#include "braid3/garside.hpp"

namespace braid3 {

namespace {

void append_syllable(std::vector<BraidLetter>& letters, int index, int exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(exponent); ++i) letters.push_back({index, sign});
}

bool knot_parity(int u, int v, int w) {
  const bool uo = u % 2 != 0, vo = v % 2 != 0, wo = w % 2 != 0;
  return (uo && !vo && !wo) || (wo && !uo && !vo) || (uo && vo && wo);
}

// Theorem-level constraints under which exactly two conjugacy classes exist.
bool two_class_constraints(const FlypeTriple& t) {
  const int mid = t.v + t.epsilon;
  if (t.u == mid || t.u == t.w || mid == t.w) return false;
  if (std::abs(t.v) < 2) return false;
  for (int x : {t.u, t.w})
    if (x == 0 || x == t.epsilon || x == 2 * t.epsilon) return false;
  return true;
}

std::optional<FlypeTriple> find_flype(const BraidWord& w, int bound,
                                      std::optional<int> epsilon_filter) {
  if (w.strands() != 3) throw std::invalid_argument("detect_flype: 3-strand words only");
  if (bound < static_cast<int>(w.size()))
    throw std::invalid_argument("detect_flype: bound below the word's letter length");

  const int e = exponent_sum(w);
  const auto cycle_type = permutation_of(w).cycle_type();

  std::set<std::tuple<int, int, int, int>> candidates;
  // Direct search, and the search through the inverse word: a flype position
  // for w^-1 with triple (a,b,c,d) gives w the triple (-c,-b,-a,-d).
  for (const bool through_inverse : {false, true}) {
    const int target = through_inverse ? -e : e;
    for (int eps : {-1, 1}) {
      for (int u = -bound; u <= bound; ++u) {
        const int rest = bound - std::abs(u);
        for (int v = -rest; v <= rest; ++v) {
          const int w3 = target - eps - u - v;
          if (std::abs(u) + std::abs(v) + std::abs(w3) > bound) continue;
          const FlypeTriple t = through_inverse ? FlypeTriple{-w3, -v, -u, -eps}
                                                : FlypeTriple{u, v, w3, eps};
          if (epsilon_filter && t.epsilon != *epsilon_filter) continue;
          if (!two_class_constraints(t)) continue;
          candidates.insert({t.u, t.v, t.w, t.epsilon});
        }
      }
    }
  }
  std::vector<FlypeTriple> order;
  order.reserve(candidates.size());
  for (const auto& [u, v, w3, eps] : candidates) order.push_back({u, v, w3, eps});
  std::stable_sort(order.begin(), order.end(), [](const FlypeTriple& a, const FlypeTriple& b) {
    return std::tuple_cat(triple_sort_key(a), std::tuple(a.epsilon)) <
           std::tuple_cat(triple_sort_key(b), std::tuple(b.epsilon));
  });

  const auto sss = super_summit_set(w);
  std::set<std::string> keys;
  for (const auto& nf : sss) keys.insert(nf.key());
  const int target_inf = sss.front().inf();
  const int target_sup = sss.front().sup();

  for (const auto& t : order) {
    const BraidWord cand = flype_word(t);
    if (permutation_of(cand).cycle_type() != cycle_type) continue;
    const GarsideNormalForm s = summit_representative(normal_form(cand));
    if (s.inf() != target_inf || s.sup() != target_sup) continue;
    if (keys.count(s.key())) return t;
  }
  return std::nullopt;
}

}  // namespace

std::string triple_text(const FlypeTriple& t) {
  std::string s = "(" + std::to_string(t.u) + "," + std::to_string(t.v) + "," +
                  std::to_string(t.w) + (t.epsilon == 1 ? ";+)" : ")");
  return s;
}

std::tuple<int, int, int, int, int, int, int> triple_sort_key(const FlypeTriple& t) {
  return {braid_crossing_number(t), std::abs(t.u), t.u < 0, std::abs(t.v),
          t.v < 0,                  std::abs(t.w), t.w < 0};
}

BraidWord flype_word(const FlypeTriple& t) {
  std::vector<BraidLetter> letters;
  append_syllable(letters, 1, t.u);
  append_syllable(letters, 2, t.v);
  append_syllable(letters, 1, t.w);
  append_syllable(letters, 2, t.epsilon);
  return BraidWord(3, std::move(letters));
}

FlypeTriple lemma1_step(const FlypeTriple& t) {
  return {t.v + t.epsilon, t.w - t.epsilon, t.u, t.epsilon};
}

std::array<FlypeTriple, 3> lemma1_orbit(const FlypeTriple& t) {
  const FlypeTriple s = lemma1_step(t);
  return {t, s, lemma1_step(s)};
}

FlypeTriple flype_partner(const FlypeTriple& t) { return {t.w, t.v, t.u, t.epsilon}; }

Admissibility admissibility(const FlypeTriple& t) {
  if (t.epsilon != -1) return {false, AdmissibilityReason::positive_flype_sign};
  if (!knot_parity(t.u, t.v, t.w)) return {false, AdmissibilityReason::closure_not_knot};
  if (std::abs(t.u) < 2 || std::abs(t.v) < 2 || std::abs(t.w) < 2)
    return {false, AdmissibilityReason::magnitude_below_two};
  if (t.u == -2 || t.w == -2 || t.v == 2)
    return {false, AdmissibilityReason::excluded_exponent};
  const int a = t.u, b = t.v - 1, c = t.w;
  if (a == b || a == c || b == c) return {false, AdmissibilityReason::entries_not_distinct};
  return {true, AdmissibilityReason::admissible};
}

bool is_admissible(const FlypeTriple& t) { return admissibility(t).admissible; }

int braid_crossing_number(const FlypeTriple& t) {
  return std::abs(t.u) + std::abs(t.v) + std::abs(t.w) + 1;
}

int bennequin(const FlypeTriple& t) {
  if (t.epsilon != -1)
    throw std::domain_error("bennequin: defined for negative flype triples only");
  return t.u + t.v + t.w - 4;
}

std::optional<FlypeTriple> detect_flype(const BraidWord& w, int bound,
                                        std::optional<int> epsilon_filter) {
  return find_flype(w, bound, epsilon_filter);
}

std::string link_description(const BelowIndexThree& c) {
  if (c.k == 0) return "2-component unlink";
  if (c.k == 1 || c.k == -1) return "unknot";
  return "torus link of type (2," + std::to_string(c.k) + ")";
}

ClassificationCase classify(const BraidWord& w, int bound) {
  if (w.strands() != 3) throw std::invalid_argument("classify: 3-strand words only");
  const int e = exponent_sum(w);
  const std::pair<int, int> below[] = {{e - 1, +1}, {e + 1, -1}};
  for (const auto& [k, sign] : below) {
    std::vector<BraidLetter> letters;
    append_syllable(letters, 1, k);
    letters.push_back({2, sign});
    if (conjugate_test(w, BraidWord(3, std::move(letters)))) return BelowIndexThree{k, sign};
  }
  if (auto t = find_flype(w, bound, std::nullopt))
    return FlypePair{*t, flype_partner(*t), is_admissible(*t)};
  return UniqueClassWithinBound{bound};
}

}  // namespace braid3
