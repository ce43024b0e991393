#include "wrc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wrc {

Interval::Interval(int prec) : prec_(prec) {
  if (prec < 2) throw std::invalid_argument("interval precision < 2");
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::check() const {
  if (mpfr_cmp(lo_, hi_) > 0)
    throw std::logic_error("interval invariant violated: lo > hi");
}

Interval Interval::exact(long long v, int prec) {
  Interval r(prec);
  mpfr_set_sj(r.lo_, v, MPFR_RNDD);
  mpfr_set_sj(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::exact(const mpz_class& v, int prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::ratio(const mpz_class& p, const mpz_class& q, int prec) {
  if (q == 0) throw std::domain_error("interval ratio with zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  Interval out(prec);
  mpfr_set_q(out.lo_, r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, r.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::ratio(long long p, long long q, int prec) {
  return ratio(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)),
               prec);
}

Interval Interval::bounds(double lo, double hi, int prec) {
  if (lo > hi) throw std::invalid_argument("interval bounds: lo > hi");
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::pi(int prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const { return 0.5 * (lo() + hi()); }

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::contains(double x) const {
  return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool Interval::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

bool Interval::certainly_le(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool Interval::certainly_lt(double x) const { return mpfr_cmp_d(hi_, x) < 0; }
bool Interval::certainly_gt(double x) const { return mpfr_cmp_d(lo_, x) > 0; }

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  // lo: min over the four endpoint products rounded down, hi: max rounded up.
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (auto x : a)
    for (auto y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw std::domain_error("interval division by enclosure containing zero");
  Interval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (auto x : a)
    for (auto y : b) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative");
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0)
    throw std::domain_error("interval log of non-positive");
  Interval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_neg(t, lo_, MPFR_RNDU);
  if (mpfr_cmp(t, hi_) > 0)
    mpfr_set(r.hi_, t, MPFR_RNDU);
  else
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::pow_int(long e) const {
  if (e < 0) return Interval::exact(1, prec_) / pow_int(-e);
  Interval acc = Interval::exact(1, prec_);
  Interval base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Interval Interval::sin_pi_ratio(long long a, long long q, int prec) {
  if (a <= 0 || a >= q) throw std::domain_error("sin_pi_ratio needs 0<a<q");
  // x = pi*a/q computed as an enclosure, then sin at the midpoint widened by
  // the interval radius (|sin'| <= 1) plus one ulp for the sin rounding.
  Interval x = Interval::pi(prec) * Interval::ratio(a, q, prec);
  Interval r(prec);
  mpfr_t m, s, rad, half;
  mpfr_init2(m, prec);
  mpfr_init2(s, prec);
  mpfr_init2(rad, prec);
  mpfr_init2(half, prec);
  mpfr_add(m, x.lo_, x.hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_sub(rad, x.hi_, x.lo_, MPFR_RNDU);  // full width >= radius + |m - mid|
  mpfr_sin(s, m, MPFR_RNDN);
  // pad = width + 2^(1-prec) covers sin rounding and midpoint rounding
  mpfr_set_ui_2exp(half, 1, 1 - prec, MPFR_RNDU);
  mpfr_add(rad, rad, half, MPFR_RNDU);
  mpfr_sub(r.lo_, s, rad, MPFR_RNDD);
  mpfr_add(r.hi_, s, rad, MPFR_RNDU);
  mpfr_clear(m);
  mpfr_clear(s);
  mpfr_clear(rad);
  mpfr_clear(half);
  // sin on (0, pi) stays in (0, 1]
  if (mpfr_cmp_ui(r.hi_, 1) > 0) mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
  return r;
}

std::optional<Interval> Interval::intersect(const Interval& o) const {
  if (!overlaps(o)) return std::nullopt;
  Interval r(std::max(prec_, o.prec_));
  mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) >= 0 ? lo_ : o.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) <= 0 ? hi_ : o.hi_, MPFR_RNDU);
  r.check();
  return r;
}

Interval Interval::hull(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) <= 0 ? lo_ : o.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) >= 0 ? hi_ : o.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::str(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << "[" << lo() << ", " << hi() << "]";
  return os.str();
}

Interval operator*(long long a, const Interval& b) {
  return Interval::exact(a, b.precision()) * b;
}

}  // namespace wrc
