#include "wrc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wrc {

Permutation Permutation::identity(int degree) {
  std::vector<uint16_t> v(degree);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation::Permutation(std::vector<uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint16_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::parse(const std::string& text, int degree) {
  if (degree < 1 || degree > 65535)
    throw std::invalid_argument("degree out of range");
  std::vector<uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree + 1, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    throw std::invalid_argument("empty permutation string (use \"()\" for the identity)");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument(std::string("expected '(' at \"") +
                                  text.substr(i) + "\"");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t start = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i)
        throw std::invalid_argument(std::string("expected point at \"") +
                                    text.substr(start) + "\"");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1 || pt > degree)
        throw std::invalid_argument("point " + std::to_string(pt) +
                                    " outside 1.." + std::to_string(degree));
      if (used[pt])
        throw std::invalid_argument("point " + std::to_string(pt) +
                                    " repeated");
      used[pt] = true;
      cyc.push_back(pt);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument(std::string("malformed cycle near \"") +
                                  text.substr(i) + "\"");
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = static_cast<uint16_t>(cyc[(k + 1) % cyc.size()] - 1);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<uint16_t> v(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) v[x] = o.img_[img_[x]];
  Permutation r;
  r.img_ = std::move(v);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<uint16_t> v(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) v[img_[x]] = static_cast<uint16_t>(x);
  Permutation r;
  r.img_ = std::move(v);
  return r;
}

Permutation Permutation::power(long long e) const {
  long long n = order();
  e %= n;
  if (e < 0) e += n;
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // (g^-1 h g)(x) = g(h(g^-1(x)))
  std::vector<uint16_t> v(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) v[g.img_[x]] = g.img_[img_[x]];
  Permutation r;
  r.img_ = std::move(v);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) ++moved;
  if (moved != 2) return false;
  for (size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x && img_[img_[x]] != x) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(img_.size(), false);
  for (size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = img_[y];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

long long Permutation::order() const {
  long long l = 1;
  for (int len : cycle_type()) l = std::lcm<long long>(l, len);
  return l;
}

int Permutation::orbit_count() const {
  return static_cast<int>(cycle_type().size());
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) {
      seen[x] = true;
      continue;
    }
    os << '(';
    size_t y = x;
    bool first = true;
    while (!seen[y]) {
      if (!first) os << ',';
      os << (y + 1);
      seen[y] = true;
      y = img_[y];
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace wrc
