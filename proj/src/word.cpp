#include "braid3/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braid3 {

namespace {

constexpr long kMaxSyllableExponent = 1000000;

long parse_integer(const std::string& tok, const char* what) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (end != tok.c_str() + tok.size() || errno != 0)
    throw std::invalid_argument(std::string("parse: malformed ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw std::invalid_argument("BraidWord: strand count must be at least 2");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw std::invalid_argument("BraidWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("BraidWord: sign must be +-1");
  }
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands_override) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  std::vector<BraidLetter> letters;
  int max_index = 0;
  const bool syllables = !tokens.empty() && tokens.front().front() == 's';
  for (const auto& tok : tokens) {
    int index;
    long exponent;
    if (syllables) {
      const auto caret = tok.find('^');
      if (tok.size() < 4 || tok[0] != 's' || caret == std::string::npos)
        throw std::invalid_argument("parse: malformed syllable token '" + tok + "'");
      index = static_cast<int>(parse_integer(tok.substr(1, caret - 1), "generator index"));
      exponent = parse_integer(tok.substr(caret + 1), "exponent");
    } else {
      const long k = parse_integer(tok, "letter");
      index = static_cast<int>(k < 0 ? -k : k);
      exponent = k < 0 ? -1 : 1;
    }
    if (index < 1) throw std::invalid_argument("parse: generator index must be >= 1");
    if (exponent == 0) throw std::invalid_argument("parse: zero exponent in '" + tok + "'");
    if (exponent > kMaxSyllableExponent || exponent < -kMaxSyllableExponent)
      throw std::invalid_argument("parse: exponent too large in '" + tok + "'");
    const int sign = exponent < 0 ? -1 : 1;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
      letters.push_back({index, sign});
    if (index > max_index) max_index = index;
  }
  int strands = max_index + 1 < 2 ? 2 : max_index + 1;
  if (strands_override) {
    if (*strands_override < strands)
      throw std::invalid_argument("parse: strand override below max generator index + 1");
    strands = *strands_override;
  }
  return BraidWord(strands, std::move(letters));
}

std::string syllable_text(const BraidWord& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(w[i].index) + "^" +
           std::to_string(static_cast<long>(w[i].sign) * static_cast<long>(j - i));
    i = j;
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (const auto& l : w.letters()) p = p.then(Permutation::transposition(w.strands(), l.index));
  return p;
}

int component_count(const BraidWord& w) { return permutation_of(w).cycle_count(); }

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (const auto& l : w.letters()) e += l.sign;
  return e;
}

int self_linking(const BraidWord& w) { return exponent_sum(w) - w.strands(); }

BraidWord inverse(const BraidWord& w) {
  std::vector<BraidLetter> letters(w.letters().rbegin(), w.letters().rend());
  for (auto& l : letters) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("concat: strand count mismatch");
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord cyclic_rotate(const BraidWord& w, int k) {
  if (w.size() == 0) return w;
  const long n = static_cast<long>(w.size());
  long r = ((k % n) + n) % n;
  std::vector<BraidLetter> letters;
  letters.reserve(w.size());
  for (long i = 0; i < n; ++i) letters.push_back(w[(i + r) % n]);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord with_strands(const BraidWord& w, int strands) {
  return BraidWord(strands, w.letters());
}

}  // namespace braid3
