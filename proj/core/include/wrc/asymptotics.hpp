#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wrc/interval.hpp"

namespace wrc {

/// Partial sum of sum_K res(zeta_K) / (2^{i(K)} d_K^2 zeta_K(2)) over
/// fundamental |d_K| <= D, with a certified bound on the omitted mass.
struct ResidueSeries {
  long long truncation_d = 0;
  Interval partial_sum;
  double tail = 0;  // upper bound on the sum over |d| > D
  long long terms = 0;
};

// Tail bound for the residue series: every term with |d| = n is at most
// 8 e log(n) / n^2 (degree-2 residue bound at eps = 1/log n, zeta_K(2) > 1,
// 2^{-i} <= 1), so the tail over both signs is below
//     2 * integral_D^inf 8 e log(t)/t^2 dt = 16 e (log D + 1) / D.
double tail_bound(long long truncation_d);

// Sums the series over all fundamental |d| <= D through the L-value route
// (res zeta_K = L(1, chi_d); no class numbers). Errors when the tail bound
// alone exceeds tol, reporting the required D. Terms are added in ascending
// |d| regardless of worker count.
ResidueSeries residue_series(long long truncation_d, double tol,
                             unsigned workers = 1,
                             int prec = Interval::kDefaultPrec);

// The same sum restricted to an explicit field set (no tail).
Interval restricted_residue_sum(const std::vector<long long>& field_discs,
                                double per_field_tol = 1e-7,
                                int prec = Interval::kDefaultPrec);

// Single term res zeta_K / (2^{i(K)} d^2 zeta_K(2)) via L-values only.
Interval residue_series_term(long long d, double tol = 1e-7,
                             int prec = Interval::kDefaultPrec);

struct RankBoundQuery {
  std::optional<long long> base_disc;  // nullopt = base field Q
  long long ell = 2;
  std::vector<long long> primes;  // rational primes, lifted to the base
};

struct RankBound {
  long long s_exponent = 0;
  long long bound = 0;  // (ell^s - 1)/(ell - 1)
};

// Upper bound for the number of C_ell extensions unramified outside S.
RankBound ell_rank_bound(const RankBoundQuery& q);

// Exact number of quadratic fields of Q unramified outside S u {inf}:
// 2^(a+b) - 1 with a odd primes in S, b = 2 if 2 in S. The second route
// multiplies prime discriminants and checks each product is fundamental.
long long exact_quadratic_ramified_count(const std::vector<long long>& primes);
long long exact_quadratic_ramified_count_products(
    const std::vector<long long>& primes);
// Third route: filter a fundamental-discriminant sieve (only for small S).
long long exact_quadratic_ramified_count_sieve(
    const std::vector<long long>& primes, long long sieve_bound);

struct SlopeFit {
  double exponent = 0;   // a-hat from log-log least squares
  double intercept = 0;  // log c
  double log_power = 0;  // b-hat when fitted with a log(x) factor
  double residual = 0;   // rms of log residuals (plain fit)
};

// Least squares on (log x, log y). Needs >= 4 samples spanning >= 2 decades,
// all counts positive. log_mode adds a log log x regressor.
SlopeFit slope_fit(const std::vector<std::pair<double, double>>& samples,
                   bool log_mode = false);

struct YExponentCheck {
  double y_exponent = 0;
  double zd4_exponent = 0;
  bool pass = false;
};

// Degenerate towers are negligible: fitted Y exponent <= 0.85 and the D4
// exponent within [0.9, 1.1].
YExponentCheck y_exponent_check(
    const std::vector<std::pair<double, double>>& zd4_samples,
    const std::vector<std::pair<double, double>>& y_samples);

}  // namespace wrc
