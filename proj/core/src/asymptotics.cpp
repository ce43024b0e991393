#include "wrc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <stdexcept>

#include "wrc/quad_field.hpp"

namespace wrc {

double tail_bound(long long d) {
  if (d < 16) throw std::invalid_argument("tail bound needs D >= 16");
  double dd = static_cast<double>(d);
  // 16 e (log D + 1)/D, nudged up to keep the bound valid in doubles
  double v = 16.0 * std::exp(1.0) * (std::log(dd) + 1.0) / dd;
  return v * (1.0 + 1e-12);
}

Interval residue_series_term(long long d, double tol, int prec) {
  QuadraticField k(d);
  Interval res = l_value(d, 1, tol, prec).value;  // = res zeta_K over Q
  Interval z2 = k.zeta2(tol);
  Interval term = res / z2;
  if (d < 0) term = term / Interval::exact(2, prec);
  return term / Interval::exact(d, prec).pow_int(2);
}

namespace {

Interval sum_terms(const std::vector<long long>& discs, double per_field_tol,
                   unsigned workers, int prec) {
  std::vector<Interval> terms(discs.size(), Interval(prec));
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i)
      terms[i] = residue_series_term(discs[i], per_field_tol, prec);
  };
  if (workers <= 1 || discs.size() < 8) {
    work(0, discs.size());
  } else {
    size_t chunk = (discs.size() + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < workers; ++w) {
      size_t lo = w * chunk, hi = std::min(discs.size(), lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, work, lo, hi));
    }
    for (auto& f : futs) f.get();
  }
  // deterministic reduction in the given (ascending |d|) order
  Interval sum(prec);
  for (auto& t : terms) sum += t;
  return sum;
}

}  // namespace

ResidueSeries residue_series(long long D, double tol, unsigned workers,
                             int prec) {
  if (D < 3) throw std::invalid_argument("residue series needs D >= 3");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  double tail = D >= 16 ? tail_bound(D) : tail_bound(16);
  if (tail >= tol) {
    // invert 16 e (log t + 1)/t <= tol/2 by doubling
    long long need = 16;
    while (tail_bound(need) > tol / 2 && need < (1LL << 60)) need *= 2;
    throw std::runtime_error(
        "residue series tolerance unachievable at D = " + std::to_string(D) +
        ": tail bound " + std::to_string(tail) + " exceeds tol; need D >= " +
        std::to_string(need));
  }
  auto discs = fundamental_discs(D);
  // Budget the enclosure width: the tail eats `tail`, the summation may use
  // tol - tail. A term of height ~1/d^2 computed from L-values of relative
  // width w contributes ~3w/d^2; sum over |d| <= D is below 3w * pi^2/3.
  double width_budget = tol - tail;
  double per_field_tol = std::max(1e-12, width_budget / 64.0);
  ResidueSeries out;
  out.truncation_d = D;
  out.tail = tail;
  out.terms = static_cast<long long>(discs.size());
  out.partial_sum = sum_terms(discs, per_field_tol, workers, prec);
  if (out.partial_sum.width() + tail > tol)
    throw std::runtime_error(
        "residue series failed its width budget; widen tol");
  return out;
}

Interval restricted_residue_sum(const std::vector<long long>& field_discs,
                                double per_field_tol, int prec) {
  std::vector<long long> discs = field_discs;
  std::sort(discs.begin(), discs.end(),
            [](long long a, long long b) {
              if (std::llabs(a) != std::llabs(b))
                return std::llabs(a) < std::llabs(b);
              return a > b;
            });
  discs.erase(std::unique(discs.begin(), discs.end()), discs.end());
  return sum_terms(discs, per_field_tol, 1, prec);
}

// ---------------------------------------------------------------------------
// ell-rank bound and the exact quadratic oracle
// ---------------------------------------------------------------------------

RankBound ell_rank_bound(const RankBoundQuery& q) {
  if (q.ell < 2) throw std::invalid_argument("ell must be a prime");
  long long rank = 0, m = 1, r1 = 1;
  long long s1 = 0;
  if (!q.base_disc) {
    for (long long p : q.primes)
      if (p != q.ell) ++s1;
  } else {
    QuadraticField k(*q.base_disc);
    m = 2;
    r1 = k.r1();
    if (q.ell == 2) {
      // genus theory: 2-rank = (number of prime discriminant factors) - 1
      long long d = std::llabs(k.discriminant());
      long long t = d % 2 == 0 ? 1 : 0;
      long long odd = d;
      while (odd % 2 == 0) odd /= 2;
      for (long long p = 3; p * p <= odd; p += 2)
        if (odd % p == 0) {
          ++t;
          while (odd % p == 0) odd /= p;
        }
      if (odd > 1) ++t;
      rank = t - 1;
    } else {
      // rk_ell <= v_ell(h), an upper bound good enough for the inequality
      long long h = k.class_number();
      while (h % q.ell == 0) {
        h /= q.ell;
        ++rank;
      }
    }
    for (long long p : q.primes) {
      if (p == q.ell) continue;
      int chi = kronecker(k.discriminant(), p);
      s1 += (chi == 1) ? 2 : 1;  // split primes lift to two ideals
    }
  }
  long long s = rank + s1 + 2 * m + (q.ell == 2 ? r1 : 0);
  RankBound rb;
  rb.s_exponent = s;
  long long pow = 1, bound = 0;
  for (long long i = 0; i < s; ++i) {
    if (pow > (1LL << 62) / q.ell)
      throw std::overflow_error("rank bound overflow");
    pow *= q.ell;
  }
  bound = (pow - 1) / (q.ell - 1);
  rb.bound = bound;
  return rb;
}

long long exact_quadratic_ramified_count(const std::vector<long long>& primes) {
  long long a = 0;
  bool has2 = false;
  std::set<long long> seen;
  for (long long p : primes) {
    if (!seen.insert(p).second) continue;
    if (p == 2)
      has2 = true;
    else
      ++a;
  }
  long long exp = a + (has2 ? 2 : 0);
  if (exp > 40) throw std::overflow_error("too many primes for exact count");
  return (1LL << exp) - 1;
}

long long exact_quadratic_ramified_count_products(
    const std::vector<long long>& primes) {
  std::set<long long> odd;
  bool has2 = false;
  for (long long p : primes) {
    if (p == 2)
      has2 = true;
    else
      odd.insert(p);
  }
  // prime discriminants: p* = +-p = 1 mod 4 for odd p; -4, 8, -8 for 2
  std::vector<long long> parts;
  for (long long p : odd) parts.push_back(p % 4 == 1 ? p : -p);
  std::vector<long long> two_parts = {1};
  if (has2) two_parts = {1, -4, 8, -8};
  std::set<long long> discs;
  size_t n = parts.size();
  if (n > 24) throw std::overflow_error("too many primes for product oracle");
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    __int128 prod = 1;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) prod *= parts[i];
    for (long long t : two_parts) {
      __int128 d = prod * t;
      if (d == 1) continue;
      if (d > INT64_MAX || d < INT64_MIN)
        throw std::overflow_error("discriminant product overflow");
      long long dd = static_cast<long long>(d);
      if (!is_fundamental_discriminant(dd))
        throw std::logic_error("prime discriminant product is not fundamental");
      discs.insert(dd);
    }
  }
  return static_cast<long long>(discs.size());
}

long long exact_quadratic_ramified_count_sieve(
    const std::vector<long long>& primes, long long sieve_bound) {
  std::set<long long> allowed(primes.begin(), primes.end());
  long long count = 0;
  for (long long d : fundamental_discs(sieve_bound)) {
    long long n = std::llabs(d);
    for (long long p : allowed)
      while (n % p == 0) n /= p;
    if (n == 1) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// slope fitting
// ---------------------------------------------------------------------------

SlopeFit slope_fit(const std::vector<std::pair<double, double>>& samples,
                   bool log_mode) {
  if (samples.size() < 4)
    throw std::invalid_argument("slope fit needs at least 4 samples");
  double xmin = samples.front().first, xmax = samples.front().first;
  for (auto& [x, y] : samples) {
    if (x <= 0 || y <= 0)
      throw std::invalid_argument("slope fit needs positive samples");
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  if (xmax < 100.0 * xmin)
    throw std::invalid_argument("slope fit needs samples spanning >= 2 decades");

  size_t n = samples.size();
  SlopeFit fit;
  if (!log_mode) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : samples) {
      double lx = std::log(x), ly = std::log(y);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.exponent * sx) / n;
    double ss = 0;
    for (auto& [x, y] : samples) {
      double r = std::log(y) - (fit.intercept + fit.exponent * std::log(x));
      ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
  }
  // log y = c + a log x + b log log x, by 3x3 normal equations
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double rhs[3] = {0, 0, 0};
  for (auto& [x, y] : samples) {
    double v[3] = {1.0, std::log(x), std::log(std::log(x))};
    double ly = std::log(y);
    for (int i = 0; i < 3; ++i) {
      rhs[i] += v[i] * ly;
      for (int j = 0; j < 3; ++j) m[i][j] += v[i] * v[j];
    }
  }
  // Gaussian elimination with partial pivoting
  int idx[3] = {0, 1, 2};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::fabs(m[idx[r]][c]) > std::fabs(m[idx[piv]][c])) piv = r;
    std::swap(idx[c], idx[piv]);
    for (int r = c + 1; r < 3; ++r) {
      double f = m[idx[r]][c] / m[idx[c]][c];
      for (int j = c; j < 3; ++j) m[idx[r]][j] -= f * m[idx[c]][j];
      rhs[idx[r]] -= f * rhs[idx[c]];
    }
  }
  double sol[3];
  for (int c = 2; c >= 0; --c) {
    double v = rhs[idx[c]];
    for (int j = c + 1; j < 3; ++j) v -= m[idx[c]][j] * sol[j];
    sol[c] = v / m[idx[c]][c];
  }
  fit.intercept = sol[0];
  fit.exponent = sol[1];
  fit.log_power = sol[2];
  double ss = 0;
  for (auto& [x, y] : samples) {
    double r = std::log(y) - (sol[0] + sol[1] * std::log(x) +
                              sol[2] * std::log(std::log(x)));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

YExponentCheck y_exponent_check(
    const std::vector<std::pair<double, double>>& zd4_samples,
    const std::vector<std::pair<double, double>>& y_samples) {
  YExponentCheck chk;
  chk.zd4_exponent = slope_fit(zd4_samples).exponent;
  chk.y_exponent = slope_fit(y_samples).exponent;
  chk.pass = chk.y_exponent <= 0.85 && chk.zd4_exponent >= 0.9 &&
             chk.zd4_exponent <= 1.1;
  return chk;
}

}  // namespace wrc
