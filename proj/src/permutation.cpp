#include "braid3/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braid3 {

Permutation::Permutation(std::vector<int> images_one_based) : img_(std::move(images_one_based)) {
  const int n = static_cast<int>(img_.size());
  if (n < 1) throw std::invalid_argument("Permutation: empty image list");
  std::vector<char> seen(n, 0);
  for (int& v : img_) {
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v - 1] = 1;
    v -= 1;  // store 0-based
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition: index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::half_twist(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - i;
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation r = *this;
  for (int& v : r.img_) v = next.img_[v];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string Permutation::one_line() const {
  std::string s = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) s += " ";
    s += std::to_string(img_[i] + 1);
  }
  s += "]";
  return s;
}

}  // namespace braid3
