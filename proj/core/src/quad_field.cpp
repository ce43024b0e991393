#include "wrc/quad_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace wrc {

namespace {

long long isqrt_ll(long long n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(long long n, long long* root = nullptr) {
  if (n < 0) return false;
  long long r = isqrt_ll(n);
  if (root) *root = r;
  return r * r == n;
}

long long checked_ll(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) ||
      v < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error(std::string("int64 overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

int kronecker(long long a, long long n) {
  long long b = n;
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (b & 1) == 0) return 0;
  int k = 1;
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  int v = 0;
  while ((b & 1) == 0) {
    b >>= 1;
    ++v;
  }
  if (v & 1) {
    int am8 = static_cast<int>(((a % 8) + 8) % 8);
    if (am8 == 3 || am8 == 5) k = -k;
  }
  // b odd positive from here; standard Jacobi loop with flips
  a %= b;
  if (a < 0) a += b;
  while (a != 0) {
    v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) {
      int bm8 = static_cast<int>(b % 8);
      if (bm8 == 3 || bm8 == 5) k = -k;
    }
    if ((a % 4) == 3 && (b % 4) == 3) k = -k;
    long long t = b % a;
    b = a;
    a = t;
  }
  return b == 1 ? k : 0;
}

bool is_squarefree(long long n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

bool is_fundamental_discriminant(long long d) {
  if (d == 1 || d == 0) return false;
  long long r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  long long m = d / 4;
  long long mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && is_squarefree(m);
}

namespace {

std::vector<uint8_t> squarefree_sieve(long long x) {
  std::vector<uint8_t> sf(x + 1, 1);
  sf[0] = 0;
  for (long long p = 2; p * p <= x; ++p)
    for (long long q = p * p; q <= x; q += p * p) sf[q] = 0;
  return sf;
}

}  // namespace

std::vector<long long> fundamental_discs(long long x) {
  std::vector<long long> out;
  if (x < 3) {
    if (x >= 3) out.push_back(-3);
    return out;
  }
  auto sf = squarefree_sieve(x);
  for (long long n = 1; n <= x; ++n) {
    if (!sf[n]) continue;
    long long r = n % 4;
    if (r == 1 && n > 1) out.push_back(n);
    if (r == 3) out.push_back(-n);
    if (4 * n <= x) {
      if (r == 2 || r == 3) out.push_back(4 * n);
      if (r == 2 || r == 1) out.push_back(-4 * n);
    }
  }
  std::sort(out.begin(), out.end(), [](long long a, long long b) {
    long long aa = std::llabs(a), ab = std::llabs(b);
    if (aa != ab) return aa < ab;
    return a > b;
  });
  return out;
}

long long count_quadratic_q(long long x) {
  if (x < 3) return 0;
  auto sf = squarefree_sieve(x);
  long long count = 0;
  for (long long n = 1; n <= x; ++n) {
    if (!sf[n]) continue;
    long long r = n % 4;
    if (r == 1 && n > 1) ++count;
    if (r == 3) ++count;
    if (4 * n <= x) {
      if (r == 2 || r == 3) ++count;
      if (r == 2 || r == 1) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// class numbers by binary quadratic forms
// ---------------------------------------------------------------------------

namespace {

// d < 0: reduced positive definite forms (a,b,c), |b| <= a <= c,
// b >= 0 when |b| == a or a == c.
long long definite_form_count(long long d) {
  long long D = -d;
  long long h = 0;
  for (long long a = 1; 3 * a * a <= D; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      if (((b - d) & 1) != 0) continue;  // b == d (mod 2)
      long long num = b * b + D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      ++h;
    }
  }
  return h;
}

struct Form {
  long long a, b, c;
  auto operator<=>(const Form&) const = default;
};

// d > 0 (not a square): reduced indefinite forms and their rho-cycles.
// Reduced: 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b.
long long indefinite_cycle_count(long long d) {
  long long s = isqrt_ll(d);
  auto reduced = [&](long long a, long long b) {
    long long t = 2 * std::llabs(a);
    if (b <= 0) return false;
    // sqrt(d) < t + b   and   (t - b)^2 < d  (covers t <= b too)
    if (static_cast<__int128>(t + b) * (t + b) <= d) return false;
    __int128 diff = static_cast<__int128>(t) - b;
    if (diff * diff >= d) return false;
    return true;
  };
  std::map<Form, int> forms;
  for (long long b = 1; b <= s; ++b) {
    if (((d - b * b) % 4) != 0) continue;
    long long k = (d - b * b) / 4;  // = -a*c > 0
    for (long long aa = 1; aa * aa <= k; ++aa) {
      if (k % aa != 0) continue;
      long long cc = k / aa;
      // (a, c) = (aa, -cc) and (-aa, cc)
      if (reduced(aa, b)) {
        forms.insert({Form{aa, b, -cc}, 0});
        forms.insert({Form{-aa, b, cc}, 0});
      }
      if (aa != cc && reduced(cc, b)) {
        forms.insert({Form{cc, b, -aa}, 0});
        forms.insert({Form{-cc, b, aa}, 0});
      }
    }
  }
  auto rho = [&](const Form& f) {
    long long M = 2 * std::llabs(f.c);
    long long r = ((-f.b) % M + M) % M;
    long long bp = s - (((s - r) % M + M) % M);
    long long cp = (bp * bp - d) / (4 * f.c);
    return Form{f.c, bp, cp};
  };
  long long cycles = 0;
  std::map<Form, bool> visited;
  for (auto& [f, tag] : forms) {
    if (visited[f]) continue;
    ++cycles;
    Form g = f;
    while (!visited[g]) {
      visited[g] = true;
      g = rho(g);
      if (!forms.count(g))
        throw std::logic_error("rho left the reduced form set");
    }
  }
  return cycles;
}

struct CfUnit {
  mpz_class t, u;  // (t + u sqrt(m)) / 2
  int norm;
};

// Fundamental unit of the maximal order via the continued fraction of omega.
CfUnit cf_fundamental_unit(long long m) {
  long long P = 0, Q = 1;
  if (((m % 4) + 4) % 4 == 1) {
    P = 1;
    Q = 2;
  }
  long long s = isqrt_ll(m);
  std::map<std::pair<long long, long long>, int> seen;
  std::vector<long long> digits;
  std::vector<std::pair<long long, long long>> states;
  int cycle_start = -1;
  for (int k = 0;; ++k) {
    auto st = std::make_pair(P, Q);
    auto it = seen.find(st);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen[st] = k;
    states.push_back(st);
    long long a = (P + s) / Q;
    digits.push_back(a);
    long long Pn = a * Q - P;
    long long Qn = (m - Pn * Pn) / Q;
    P = Pn;
    Q = Qn;
    if (k > 4000000) throw std::runtime_error("continued fraction diverged");
  }
  // beta = alpha_{cycle_start} is purely periodic; accumulate the period
  // matrix [[p, p'], [q, q']]; the automorph is q*beta + q'.
  mpz_class p = 1, pp = 0, q = 0, qq = 1;
  for (size_t k = cycle_start; k < digits.size(); ++k) {
    mpz_class a = static_cast<long>(digits[k]);
    mpz_class np = p * a + pp, nq = q * a + qq;
    pp = p;
    qq = q;
    p = np;
    q = nq;
  }
  mpz_class Pi = static_cast<long>(states[cycle_start].first);
  mpz_class Qi = static_cast<long>(states[cycle_start].second);
  mpz_class A = q * Pi + qq * Qi;
  mpz_class B = q;
  mpz_class t2 = 2 * A, u2 = 2 * B;
  if (t2 % Qi != 0 || u2 % Qi != 0)
    throw std::logic_error("continued fraction unit is not integral");
  CfUnit unit{t2 / Qi, u2 / Qi, 0};
  mpz_class check =
      unit.t * unit.t - mpz_class(static_cast<long>(m)) * unit.u * unit.u;
  if (check == 4)
    unit.norm = 1;
  else if (check == -4)
    unit.norm = -1;
  else
    throw std::logic_error("continued fraction unit fails the Pell relation");
  return unit;
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadraticField
// ---------------------------------------------------------------------------

QuadraticField::QuadraticField(long long d, int prec) : d_(d), prec_(prec) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument(std::to_string(d) +
                                " is not a fundamental discriminant");
  m_ = (((d % 4) + 4) % 4 == 1) ? d : d / 4;
  w_ = (d == -3) ? 6 : (d == -4) ? 4 : 2;
  if (((m_ % 4) + 4) % 4 == 1) {
    om_t_ = 1;
    om_n_ = (m_ - 1) / 4;
  } else {
    om_t_ = 0;
    om_n_ = m_;
  }
  if (d < 0) {
    h_ = definite_form_count(d);
    h_narrow_ = h_;
  } else {
    CfUnit u = cf_fundamental_unit(m_);
    unit_.t = u.t;
    unit_.u = u.u;
    unit_.norm = u.norm;
    has_unit_ = true;
    h_narrow_ = indefinite_cycle_count(d);
    if (u.norm == -1) {
      h_ = h_narrow_;
    } else {
      if (h_narrow_ % 2 != 0)
        throw std::logic_error(
            "narrow class count must be even when the unit norm is +1");
      h_ = h_narrow_ / 2;
    }
  }
}

const FundamentalUnit& QuadraticField::fundamental_unit() const {
  if (!has_unit_)
    throw std::domain_error("imaginary field has no fundamental unit");
  return unit_;
}

Interval QuadraticField::regulator() const {
  if (d_ < 0) return Interval::exact(0, prec_);
  Interval t = Interval::exact(unit_.t, prec_);
  Interval u = Interval::exact(unit_.u, prec_);
  Interval sm = Interval::exact(m_, prec_).sqrt();
  Interval eps = (t + u * sm) / Interval::exact(2, prec_);
  return eps.log();
}

QuadElt QuadraticField::mul(const QuadElt& x, const QuadElt& y) const {
  // (a+bw)(c+dw) with w^2 = t*w + n
  __int128 bd = static_cast<__int128>(x.b) * y.b;
  __int128 a = static_cast<__int128>(x.a) * y.a + bd * om_n_;
  __int128 b = static_cast<__int128>(x.a) * y.b +
               static_cast<__int128>(x.b) * y.a + bd * om_t_;
  return {checked_ll(a, "mul"), checked_ll(b, "mul")};
}

QuadElt QuadraticField::conj(const QuadElt& x) const {
  return {checked_ll(static_cast<__int128>(x.a) +
                         static_cast<__int128>(x.b) * om_t_,
                     "conj"),
          -x.b};
}

long long QuadraticField::norm(const QuadElt& x) const {
  __int128 n = static_cast<__int128>(x.a) * x.a +
               static_cast<__int128>(om_t_) * x.a * x.b -
               static_cast<__int128>(om_n_) * x.b * x.b;
  return checked_ll(n, "norm");
}

long long QuadraticField::trace(const QuadElt& x) const {
  return checked_ll(2 * static_cast<__int128>(x.a) +
                        static_cast<__int128>(x.b) * om_t_,
                    "trace");
}

bool QuadraticField::is_square_elt(const QuadElt& x) const {
  if (x.a == 0 && x.b == 0) return true;
  long long nx = norm(x);
  long long s;
  if (!is_perfect_square(std::llabs(nx), &s)) return false;
  if (nx < 0) return false;  // N(y^2) = N(y)^2 >= 0
  long long tx = trace(x);
  for (long long ny : {s, -s}) {
    if (d_ < 0 && ny < 0) continue;
    long long t2 = tx + 2 * ny;  // = tr(y)^2
    long long T;
    if (t2 < 0 || !is_perfect_square(t2, &T)) continue;
    for (long long ty : {T, -T}) {
      // y = (ty + k sqrt(m))/2 with k^2 m = ty^2 - 4 ny
      long long disc = ty * ty - 4 * ny;
      if (disc % m_ != 0) continue;
      long long k2 = disc / m_;
      long long k;
      if (k2 < 0 || !is_perfect_square(k2, &k)) continue;
      for (long long ky : {k, -k}) {
        QuadElt y;
        if (om_t_ == 1) {
          if (((ty - ky) & 1) != 0) continue;
          y = {(ty - ky) / 2, ky};
        } else {
          if ((ty & 1) != 0 || (ky & 1) != 0) continue;
          y = {ty / 2, ky / 2};
        }
        if (mul(y, y) == x) return true;
      }
    }
  }
  return false;
}

double QuadraticField::embed(const QuadElt& x, bool second) const {
  double sm = std::sqrt(static_cast<double>(std::llabs(m_)));
  double w = (om_t_ == 1) ? (1 + (second ? -sm : sm)) / 2 : (second ? -sm : sm);
  return static_cast<double>(x.a) + static_cast<double>(x.b) * w;
}

QuadElt QuadraticField::unit_elt() const {
  const FundamentalUnit& u = fundamental_unit();
  // (t + u sqrt(m))/2 in (1, omega) coordinates
  if (!u.t.fits_slong_p() || !u.u.fits_slong_p())
    throw std::overflow_error("fundamental unit too large for element ops");
  long long t = u.t.get_si(), v = u.u.get_si();
  if (om_t_ == 1) return {(t - v) / 2, v};
  return {t / 2, v / 2};
}

// ---------------------------------------------------------------------------
// L-values
// ---------------------------------------------------------------------------

namespace {

// L(1, chi_d), exact finite forms over one period.
Interval l_at_1(long long d, int prec) {
  if (d < 0) {
    // pi * |sum chi(a) a| / |d|^{3/2}
    long long D = -d;
    long long S = 0;
    for (long long a = 1; a < D; ++a) S += kronecker(d, a) * a;
    if (S >= 0) throw std::logic_error("character sum sign for d < 0");
    Interval num = Interval::pi(prec) * Interval::exact(-S, prec);
    Interval den = Interval::exact(D, prec) * Interval::exact(D, prec).sqrt();
    return num / den;
  }
  // -(1/sqrt d) sum chi(a) log sin(pi a / d)
  //   = (2/sqrt d) * (log prod_{chi=-1} sin - log prod_{chi=+1} sin)
  Interval pos = Interval::exact(1, prec);
  Interval neg = Interval::exact(1, prec);
  for (long long a = 1; 2 * a < d; ++a) {
    int chi = kronecker(d, a);
    if (chi == 0) continue;
    Interval s = Interval::sin_pi_ratio(a, d, prec);
    if (chi > 0)
      pos *= s;
    else
      neg *= s;
  }
  Interval lg = neg.log() - pos.log();
  return Interval::exact(2, prec) / Interval::exact(d, prec).sqrt() * lg;
}

// L(2, chi_d) by direct summation in 2^-62 fixed point, tail 1/N.
Interval l_at_2(long long d, long long N, int prec) {
  const long long kScaleBits = 62;
  const __int128 one = static_cast<__int128>(1) << kScaleBits;
  __int128 lo = 0, hi = 0;
  for (long long n = 1; n <= N; ++n) {
    int chi = kronecker(d, n);
    if (chi == 0) continue;
    __int128 q = static_cast<__int128>(n) * n;
    __int128 f = one / q;
    __int128 c = f + (one % q != 0 ? 1 : 0);
    if (chi > 0) {
      lo += f;
      hi += c;
    } else {
      lo -= c;
      hi -= f;
    }
  }
  mpz_class zlo, zhi;
  {
    // import the 128-bit accumulators
    auto to_mpz = [](__int128 v) {
      bool neg = v < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
      mpz_class hi64 = static_cast<unsigned long>(u >> 64);
      mpz_class lo64 = static_cast<unsigned long>(u & 0xffffffffffffffffULL);
      mpz_class r = (hi64 << 64) + lo64;
      return neg ? mpz_class(-r) : r;
    };
    zlo = to_mpz(lo);
    zhi = to_mpz(hi);
  }
  mpz_class scale = mpz_class(1) << kScaleBits;
  Interval partial = Interval::ratio(zlo, scale, prec)
                         .hull(Interval::ratio(zhi, scale, prec));
  Interval tail = Interval::ratio(-1, N, prec).hull(Interval::ratio(1, N, prec));
  return partial + tail;
}

}  // namespace

LValue l_value(long long d, int s, double tol, int prec) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("l_value needs a fundamental discriminant");
  LValue out;
  out.s = s;
  out.chi_discriminant = d;
  if (s == 1) {
    out.value = l_at_1(d, prec);
    out.truncation_n = std::llabs(d);
    return out;
  }
  if (s != 2) throw std::invalid_argument("l_value supports s in {1, 2}");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const long long kBudget = 50000000;
  long long N = static_cast<long long>(std::ceil(2.5 / tol)) + 1;
  if (N > kBudget)
    throw std::runtime_error(
        "l_value tolerance unachievable within term budget; required N = " +
        std::to_string(N));
  out.value = l_at_2(d, N, prec);
  out.truncation_n = N;
  return out;
}

Interval QuadraticField::residue_zeta() const {
  // route (i): res zeta_K = zeta * L(1, chi) residue = L(1, chi_d)
  Interval via_l = l_at_1(d_, prec_);
  // route (ii): 2^r1 (2pi)^r2 h R / (w sqrt|d|)
  Interval two_pi = Interval::pi(prec_) * Interval::exact(2, prec_);
  Interval num;
  if (d_ < 0) {
    num = two_pi * Interval::exact(h_, prec_);
  } else {
    num = Interval::exact(4, prec_) * Interval::exact(h_, prec_) * regulator();
  }
  Interval den =
      Interval::exact(w_, prec_) * Interval::exact(std::llabs(d_), prec_).sqrt();
  Interval via_h = num / den;
  auto meet = via_l.intersect(via_h);
  if (!meet)
    throw std::runtime_error(
        "residue enclosures disagree for d = " + std::to_string(d_) +
        ": L-route " + via_l.str() + " vs class-number route " + via_h.str());
  return *meet;
}

Interval QuadraticField::zeta2(double tol) const {
  Interval l2 = l_value(d_, 2, tol * 0.3, prec_).value;
  Interval z2 = Interval::pi(prec_).pow_int(2) / Interval::exact(6, prec_);
  return z2 * l2;
}

Interval QuadraticField::ext_count_constant(double tol) const {
  Interval r = residue_zeta() / zeta2(tol);
  if (d_ < 0) r = r / Interval::exact(2, prec_);
  return r;
}

ResiduumReport QuadraticField::residuum_check(double eps) const {
  if (eps <= 0 || eps > 1)
    throw std::invalid_argument("residuum_check needs eps in (0, 1]");
  Interval res = residue_zeta();
  Interval e = Interval::bounds(eps, eps, prec_);
  Interval dk = Interval::exact(std::llabs(d_), prec_);
  Interval rhs = Interval::exact(8, prec_) * (e * dk.log()).exp() / e;
  ResiduumReport rep;
  rep.lhs = res.hi();
  rep.rhs = rhs.lo();
  rep.ok = res.certainly_le(rhs);
  return rep;
}

// ---------------------------------------------------------------------------
// prime elements (h = 1)
// ---------------------------------------------------------------------------

std::vector<PrimeElement> QuadraticField::prime_elements(long long bound) const {
  if (h_ != 1)
    throw std::runtime_error("prime elements need class number 1, got h = " +
                             std::to_string(h_) + " for d = " +
                             std::to_string(d_));
  if (bound < 2) return {};

  // prime sieve up to bound
  std::vector<uint8_t> is_prime(bound + 1, 1);
  is_prime[0] = is_prime[1] = 0;
  for (long long p = 2; p * p <= bound; ++p)
    if (is_prime[p])
      for (long long q = p * p; q <= bound; q += p) is_prime[q] = 0;

  struct Slot {
    std::vector<QuadElt> reps;  // one per associate class found so far
  };
  std::map<long long, Slot> split_or_ramified;
  std::vector<PrimeElement> out;
  for (long long p = 2; p <= bound; ++p) {
    if (!is_prime[p]) continue;
    int chi = kronecker(d_, p);
    if (chi == -1) {
      if (p * p <= bound)
        out.push_back(PrimeElement{p, 0, p * p, QuadElt{p, 0}});
      continue;
    }
    split_or_ramified[p] = Slot{};
  }

  auto canon_key = [](const QuadElt& x) {
    return std::make_tuple(std::max(std::llabs(x.a), std::llabs(x.b)),
                           std::llabs(x.a), std::llabs(x.b), x.a <= 0 ? 1 : 0,
                           x.b < 0 ? 1 : 0);
  };
  auto associates = [&](const QuadElt& x, const QuadElt& y, long long p) {
    // same ideal iff p | x * conj(y) coordinatewise
    QuadElt prod = mul(x, conj(y));
    return prod.a % p == 0 && prod.b % p == 0;
  };

  long long radius = isqrt_ll(bound * std::llabs(d_)) + 1;
  for (int attempt = 0; attempt < 4; ++attempt) {
    for (long long a = -radius; a <= radius; ++a) {
      for (long long b = -radius; b <= radius; ++b) {
        if (a == 0 && b == 0) continue;
        __int128 n128 = static_cast<__int128>(a) * a +
                        static_cast<__int128>(om_t_) * a * b -
                        static_cast<__int128>(om_n_) * b * b;
        __int128 absn = n128 < 0 ? -n128 : n128;
        if (absn > bound) continue;
        long long n = static_cast<long long>(absn);
        if (n < 2 || !is_prime[n]) continue;
        auto it = split_or_ramified.find(n);
        if (it == split_or_ramified.end()) continue;
        QuadElt x{a, b};
        bool placed = false;
        for (auto& rep : it->second.reps) {
          if (associates(x, rep, n)) {
            if (canon_key(x) < canon_key(rep)) rep = x;
            placed = true;
            break;
          }
        }
        if (!placed) it->second.reps.push_back(x);
      }
    }
    bool complete = true;
    for (auto& [p, slot] : split_or_ramified) {
      size_t want = (kronecker(d_, p) == 0) ? 1 : 2;
      if (slot.reps.size() > want)
        throw std::logic_error("more associate classes than primes over " +
                               std::to_string(p));
      if (slot.reps.size() < want) complete = false;
    }
    if (complete) break;
    radius *= 2;  // the box under-covered a balanced representative
    for (auto& [p, slot] : split_or_ramified) slot.reps.clear();
  }
  for (auto& [p, slot] : split_or_ramified) {
    size_t want = (kronecker(d_, p) == 0) ? 1 : 2;
    if (slot.reps.size() != want)
      throw std::runtime_error("prime element search failed for p = " +
                               std::to_string(p));
    std::sort(slot.reps.begin(), slot.reps.end(),
              [&](const QuadElt& x, const QuadElt& y) {
                return canon_key(x) < canon_key(y);
              });
    for (size_t j = 0; j < slot.reps.size(); ++j)
      out.push_back(
          PrimeElement{p, static_cast<int>(j), norm(slot.reps[j]), slot.reps[j]});
  }
  std::sort(out.begin(), out.end(), [](const PrimeElement& x, const PrimeElement& y) {
    return std::make_tuple(std::llabs(x.norm), x.p, x.conj) <
           std::make_tuple(std::llabs(y.norm), y.p, y.conj);
  });
  return out;
}

double class_bound_ratio(long long d) {
  if (std::llabs(d) < 3)
    throw std::invalid_argument("class bound ratio needs |d| >= 3");
  QuadraticField k(d);
  double ad = static_cast<double>(std::llabs(d));
  return static_cast<double>(k.class_number()) / (std::sqrt(ad) * std::log(ad));
}

long long class_number(long long d) { return QuadraticField(d).class_number(); }

FundamentalUnit fundamental_unit(long long d) {
  QuadraticField k(d);
  if (d < 0) throw std::domain_error("fundamental unit needs d > 0");
  return k.fundamental_unit();
}

}  // namespace wrc
