#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <variant>

#include "braid3/word.hpp"

namespace braid3 {

/// The 3-braid sigma1^u sigma2^v sigma1^w sigma2^epsilon in flype position.
/// The (u,v,w) shorthand always means epsilon = -1.
struct FlypeTriple {
  int u = 0;
  int v = 0;
  int w = 0;
  int epsilon = -1;
  bool operator==(const FlypeTriple&) const = default;
};

/// "(u,v,w)" for epsilon = -1, "(u,v,w;+)" for epsilon = +1.
std::string triple_text(const FlypeTriple& t);

/// The ordering used wherever triples are ranked: crossing number first, then
/// componentwise magnitude with positive entries before negative ones. This
/// makes 2 precede -3, matching the pruning toward small representatives.
std::tuple<int, int, int, int, int, int, int> triple_sort_key(const FlypeTriple& t);

/// The word sigma1^u sigma2^v sigma1^w sigma2^eps in B_3; zero exponents
/// contribute no letters.
BraidWord flype_word(const FlypeTriple& t);

/// One application of the conjugacy move (u,v,w,eps) -> (v+eps, w-eps, u, eps).
FlypeTriple lemma1_step(const FlypeTriple& t);
/// The three conjugate flype positions [t, step(t), step(step(t))].
std::array<FlypeTriple, 3> lemma1_orbit(const FlypeTriple& t);

/// (w, v, u, eps): the conjugacy class of the flype image
/// sigma1^u sigma2^eps sigma1^w sigma2^v. An involution.
FlypeTriple flype_partner(const FlypeTriple& t);

enum class AdmissibilityReason {
  admissible,
  positive_flype_sign,   // epsilon = +1: admissibility is defined for negative flypes
  closure_not_knot,      // parity outside the three knot cases
  magnitude_below_two,   // some |u|, |v|, |w| < 2
  excluded_exponent,     // u = -2, w = -2, or v = +2
  entries_not_distinct,  // (u, v-1, w) not pairwise distinct
};

struct Admissibility {
  bool admissible;
  AdmissibilityReason reason;
};

/// Full transversal-nonsimplicity admissibility test for a negative flype
/// triple: pairwise distinct (u, v-1, w); |u|, |v|, |w| >= 2; u, w != -2;
/// v != +2; and one of the knot parity patterns (u odd with v, w even;
/// w odd with u, v even; u, v, w all odd).
Admissibility admissibility(const FlypeTriple& t);
bool is_admissible(const FlypeTriple& t);

/// |u| + |v| + |w| + 1: the letter count of the flype-position word.
int braid_crossing_number(const FlypeTriple& t);

/// Bennequin number u + v + w - 4 of a negative flype triple; throws
/// std::domain_error for epsilon = +1 (use self_linking on the word).
int bennequin(const FlypeTriple& t);

/// Bounded complete search for a genuine flype position conjugate to w: tries
/// every triple with |u|+|v|+|w| <= bound and u+v+w+eps = exponent_sum(w),
/// both epsilon signs and additionally the inverse word (whose hits translate
/// back as (a,b,c,d) -> (-c,-b,-a,-d)). Candidates must meet the two-class
/// constraints ((u, v+eps, w) distinct, |v| >= 2, u and w outside
/// {0, eps, 2eps}), which rules out degenerate readings such as
/// sigma1^2 sigma2^2 = sigma1^2 sigma2 . sigma2. Returns the hit minimizing
/// (triple_sort_key, epsilon); nullopt when nothing within the bound is
/// conjugate. epsilon_filter restricts the sign of the returned triple.
std::optional<FlypeTriple> detect_flype(const BraidWord& w, int bound,
                                        std::optional<int> epsilon_filter = std::nullopt);

/// Classification outcome: conjugate to sigma1^k sigma2^(sign).
struct BelowIndexThree {
  int k;
  int sign;
  bool operator==(const BelowIndexThree&) const = default;
};
/// Classification outcome: the two-conjugacy-class flype case.
struct FlypePair {
  FlypeTriple triple;
  FlypeTriple partner;
  bool transversally_nonsimple;
  bool operator==(const FlypePair&) const = default;
};
/// Classification outcome: no special form found within the search bound.
struct UniqueClassWithinBound {
  int bound;
  bool operator==(const UniqueClassWithinBound&) const = default;
};
using ClassificationCase = std::variant<BelowIndexThree, FlypePair, UniqueClassWithinBound>;

/// "unknot", "2-component unlink", or "torus link of type (2,k)".
std::string link_description(const BelowIndexThree& c);

/// Decides which classification case a 3-braid word falls in. Case one is
/// exact: exponent-sum invariance leaves only k = e-1 (sign +) and k = e+1
/// (sign -) to test. The flype case additionally requires the triple to meet
/// the two-class constraints ((u, v+eps, w) distinct, |v| >= 2, u and w not
/// in {0, eps, 2eps}); transversally_nonsimple is is_admissible of the triple.
ClassificationCase classify(const BraidWord& w, int bound);

}  // namespace braid3
