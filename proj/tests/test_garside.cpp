#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "braid3/garside.hpp"
#include "braid3/word.hpp"

using namespace braid3;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<BraidLetter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

std::set<std::string> key_set(const std::vector<GarsideNormalForm>& forms) {
  std::set<std::string> keys;
  for (const auto& f : forms) keys.insert(f.key());
  return keys;
}

}  // namespace

TEST_CASE("normal_form: Delta, identity, single negative letter") {
  const GarsideNormalForm delta = normal_form(BraidWord::parse("1 2 1"));
  CHECK(delta.inf() == 1);
  CHECK(delta.canonical_length() == 0);

  const GarsideNormalForm id = normal_form(BraidWord::parse("1 -1"));
  CHECK(id.inf() == 0);
  CHECK(id.canonical_length() == 0);
  CHECK(id.is_identity());

  // sigma1^-1 = Delta^-1 . (sigma1 sigma2), worked out by hand
  const GarsideNormalForm neg = normal_form(BraidWord::parse("-1", 3));
  CHECK(neg.inf() == -1);
  CHECK(neg.canonical_length() == 1);
  CHECK(neg.factors().front() == permutation_of(BraidWord::parse("1 2")));
  CHECK(neg.display() == "D^-1 . [3 1 2]");
}

TEST_CASE("words_equal: braid relation and its consequences") {
  CHECK(words_equal(BraidWord::parse("1 2 1"), BraidWord::parse("2 1 2")));
  // sigma1 sigma2^2 sigma1^-1 = sigma2^-1 sigma1^2 sigma2
  CHECK(words_equal(BraidWord::parse("1 2 2 -1"), BraidWord::parse("-2 1 1 2")));
  CHECK_FALSE(words_equal(BraidWord::parse("1", 3), BraidWord::parse("2", 3)));
  CHECK_THROWS_AS(words_equal(BraidWord::parse("1"), BraidWord::parse("1", 3)),
                  std::invalid_argument);
}

TEST_CASE("normal_form: round trip re-normalizes identically") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int strands = trial % 2 ? 3 : 4;
    const BraidWord w = random_word(rng, strands, 14);
    const GarsideNormalForm nf = normal_form(w);
    CHECK(normal_form(nf.to_word()) == nf);
    CHECK(words_equal(w, nf.to_word()));
    CHECK(nf.sup() == nf.inf() + nf.canonical_length());
  }
}

TEST_CASE("cycling/decycling: length zero unchanged, conjugacy preserved") {
  const GarsideNormalForm delta = normal_form(BraidWord::parse("1 2 1"));
  CHECK(cycling(delta) == delta);
  CHECK(decycling(delta) == delta);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord w = random_word(rng, 3, 10);
    const GarsideNormalForm nf = normal_form(w);
    CHECK(conjugate_test(w, cycling(nf).to_word()));
    CHECK(conjugate_test(w, decycling(nf).to_word()));
  }
}

TEST_CASE("summit: cycling+decycling fixpoint on (3,4,5)") {
  const BraidWord w = BraidWord::parse("s1^3 s2^4 s1^5 s2^-1");
  GarsideNormalForm x = normal_form(w);
  const GarsideNormalForm s = summit_representative(x);
  // the fixpoint is conjugate and no cycling/decycling improves (inf, sup)
  CHECK(conjugate_test(w, s.to_word()));
  CHECK(s.inf() >= x.inf());
  CHECK(cycling(s).inf() <= s.inf());
  for (GarsideNormalForm y = s, prev = s;;) {
    y = cycling(y);
    CHECK(y.inf() == s.inf());  // inf is maximal on the whole cycling orbit
    if (y == s || y == prev) break;
    prev = y;
    if (y.key() == s.key()) break;
  }
}

TEST_CASE("super_summit_set: frozen small cases") {
  // Delta's only conjugate of canonical length 0 is Delta itself
  const auto sss_delta = super_summit_set(BraidWord::parse("1 2 1"));
  CHECK(sss_delta.size() == 1);
  CHECK(sss_delta.front() == normal_form(BraidWord::parse("1 2 1")));

  const auto sss_id = super_summit_set(BraidWord::parse("1 -1", 3));
  CHECK(sss_id.size() == 1);
  CHECK(sss_id.front().is_identity());

  // sigma1 and sigma2 are the only simples with exponent sum 1
  const auto sss_s1 = super_summit_set(BraidWord::parse("1", 3));
  CHECK(key_set(sss_s1) == key_set({normal_form(BraidWord::parse("1", 3)),
                                    normal_form(BraidWord::parse("2", 3))}));
}

TEST_CASE("super_summit_set: exploration-order independence") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord w = random_word(rng, 3, 8);
    const BraidWord c = random_word(rng, 3, 6);
    const BraidWord conj = concat(concat(inverse(c), w), c);
    CHECK(key_set(super_summit_set(w)) == key_set(super_summit_set(conj)));
  }
}

TEST_CASE("super_summit_set members share (inf, sup) and the class") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord w = random_word(rng, 3, 8);
    const auto sss = super_summit_set(w);
    REQUIRE(!sss.empty());
    for (const auto& m : sss) {
      CHECK(m.inf() == sss.front().inf());
      CHECK(m.sup() == sss.front().sup());
      CHECK(conjugate_test(w, m.to_word()));
    }
  }
}

TEST_CASE("conjugate_test: worked conjugacy examples") {
  // sigma1^3 sigma2^4 sigma1^5 sigma2^-1 ~ sigma1^3 sigma2^6 sigma1^3 sigma2^-1
  CHECK(conjugate_test(BraidWord::parse("s1^3 s2^4 s1^5 s2^-1"),
                       BraidWord::parse("s1^3 s2^6 s1^3 s2^-1")));
  // lambda and its double flype image split into exactly two classes. The
  // identity sigma1^-1 sigma2^3 sigma1 = sigma2 sigma1^3 sigma2^-1 gives
  // lambda'' = sigma1 lambda sigma1^-1, so lambda ~ lambda''; the single
  // flype image lambda' sits in the other class (cross-checked against a
  // numeric Burau conjugator search before freezing).
  const BraidWord lambda = BraidWord::parse("s1^5 s2^2 s1^3 s2^-1");
  const BraidWord lambda1 = BraidWord::parse("s1^5 s2^-1 s1^3 s2^2");
  const BraidWord lambda2 = BraidWord::parse("s1^6 s2^1 s1^-1 s2^3");
  CHECK(words_equal(lambda2, concat(concat(BraidWord::parse("1", 3), lambda),
                                    BraidWord::parse("-1", 3))));
  CHECK(conjugate_test(lambda, lambda2));
  CHECK_FALSE(conjugate_test(lambda, lambda1));
  CHECK_FALSE(conjugate_test(lambda1, lambda2));
  // lambda' equals its own rewriting sigma1^6 sigma2^3 sigma1^-1 sigma2
  CHECK(words_equal(lambda1, BraidWord::parse("s1^6 s2^3 s1^-1 s2^1")));
}

TEST_CASE("conjugate_test: cheap invariants and errors") {
  CHECK_FALSE(conjugate_test(BraidWord::parse("1", 3), BraidWord::parse("1 1 1", 3)));
  CHECK_FALSE(conjugate_test(BraidWord::parse("2", 3), BraidWord::parse("1 2", 3)));
  CHECK_THROWS_AS(conjugate_test(BraidWord::parse("1"), BraidWord::parse("1", 3)),
                  std::invalid_argument);
}

TEST_CASE("conjugate_test: equivalence-relation behaviour on a random corpus") {
  std::mt19937 rng(41);
  std::vector<BraidWord> corpus;
  for (int i = 0; i < 12; ++i) corpus.push_back(random_word(rng, 3, 7));
  for (const auto& w : corpus) {
    CHECK(conjugate_test(w, w));
    CHECK(conjugate_test(w, cyclic_rotate(w, 3)));
    const BraidWord c = random_word(rng, 3, 5);
    CHECK(conjugate_test(w, concat(concat(inverse(c), w), c)));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool ij = conjugate_test(corpus[i], corpus[j]);
      CHECK(ij == conjugate_test(corpus[j], corpus[i]));
      for (std::size_t k = j + 1; ij && k < corpus.size(); ++k)
        if (conjugate_test(corpus[j], corpus[k])) CHECK(conjugate_test(corpus[i], corpus[k]));
    }
}
