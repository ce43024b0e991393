#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>

namespace wrc {

/// A real value carried as a closed enclosure [lo, hi].
///
/// Endpoints are MPFR floats with directed (outward) rounding, so the true
/// value of every derived quantity stays inside the interval. The working
/// precision is a per-value parameter (default 96 bits); binary operations
/// use the larger precision of their operands.
class Interval {
 public:
  static constexpr int kDefaultPrec = 96;

  Interval() : Interval(kDefaultPrec) {}
  explicit Interval(int prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval exact(long long v, int prec = kDefaultPrec);
  static Interval exact(const mpz_class& v, int prec = kDefaultPrec);
  // Outward-rounded p/q.
  static Interval ratio(const mpz_class& p, const mpz_class& q,
                        int prec = kDefaultPrec);
  static Interval ratio(long long p, long long q, int prec = kDefaultPrec);
  // Enclosure from double endpoints (assumed already outward).
  static Interval bounds(double lo, double hi, int prec = kDefaultPrec);
  static Interval pi(int prec = kDefaultPrec);

  int precision() const { return prec_; }
  double lo() const;  // rounded toward -inf
  double hi() const;  // rounded toward +inf
  double mid() const;
  double width() const;  // hi - lo, rounded up

  bool contains(double x) const;
  bool contains(const Interval& o) const;
  bool overlaps(const Interval& o) const;
  bool is_point() const;
  // Strict comparisons of enclosures (true only when certain).
  bool certainly_le(const Interval& o) const;
  bool certainly_lt(double x) const;
  bool certainly_gt(double x) const;

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // throws if o contains 0
  Interval operator-() const;

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  Interval sqrt() const;  // requires lo >= 0
  Interval log() const;   // requires lo > 0
  Interval exp() const;
  Interval abs() const;
  Interval pow_int(long e) const;
  // sin(pi * a / q) for integers 0 < a < q, via midpoint + Lipschitz bound.
  static Interval sin_pi_ratio(long long a, long long q,
                               int prec = kDefaultPrec);

  // Tightest interval contained in both, if any.
  std::optional<Interval> intersect(const Interval& o) const;
  Interval hull(const Interval& o) const;

  std::string str(int digits = 12) const;

 private:
  mpfr_t lo_, hi_;
  int prec_;
  void check() const;  // enforces lo <= hi
};

Interval operator*(long long a, const Interval& b);

}  // namespace wrc
