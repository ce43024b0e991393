#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wrc {

/// A permutation of {1..n}, stored 0-based. Composition is left-to-right:
/// (a * b) moves x to b[a[x]], matching exponent notation x^(ab) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  explicit Permutation(std::vector<uint16_t> images);

  // Cycle notation, e.g. "(1,2)(3,4)" or "()"; fixed points may be omitted.
  // Throws std::invalid_argument naming the offending token.
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  uint16_t apply(uint16_t x) const { return img_[x]; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation power(long long e) const;
  // g^-1 * h * g
  Permutation conjugate_by(const Permutation& g) const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool is_identity() const;
  bool is_transposition() const;

  long long order() const;  // lcm of cycle lengths
  int orbit_count() const;
  // index = degree - number of orbits of <g> on the points
  int ind() const { return degree() - orbit_count(); }
  // descending cycle lengths including fixed points
  std::vector<int> cycle_type() const;

  std::string str() const;  // cycle notation, 1-based

  const std::vector<uint16_t>& images() const { return img_; }

 private:
  std::vector<uint16_t> img_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const {
    // FNV-1a over the image words
    uint64_t h = 1469598103934665603ull;
    for (uint16_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace wrc
