#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "wrc/asymptotics.hpp"
#include "wrc/quad_field.hpp"
#include "wrc/towers.hpp"

using namespace wrc;

TEST_CASE("tail bound closed form and monotonicity") {
  CHECK(tail_bound(100000) == doctest::Approx(5.44e-3).epsilon(0.01));
  CHECK(tail_bound(10000000) == doctest::Approx(7.45e-5).epsilon(0.01));
  CHECK(tail_bound(1000) > tail_bound(10000));
  CHECK(tail_bound(10000) > tail_bound(100000));
  CHECK_THROWS_AS(tail_bound(8), std::invalid_argument);
}

TEST_CASE("residue series first terms match the per-field oracle") {
  ResidueSeries s3 = residue_series(3, 1.0);
  CHECK(s3.terms == 1);
  CHECK(std::fabs(s3.partial_sum.mid() - 0.026134) < 2e-4);

  ResidueSeries s4 = residue_series(4, 1.0);
  CHECK(s4.terms == 2);
  CHECK(std::fabs(s4.partial_sum.mid() - 0.042424) < 3e-4);

  // the D=4 sum equals term(-3) + term(-4) to interval equality
  Interval manual = residue_series_term(-3) + residue_series_term(-4);
  Interval restricted = restricted_residue_sum({-3, -4});
  CHECK(restricted.lo() == manual.lo());
  CHECK(restricted.hi() == manual.hi());
}

TEST_CASE("residue series errors when the tail exceeds the tolerance") {
  CHECK_THROWS_WITH_AS(residue_series(1000, 1e-4),
                       doctest::Contains("need D >="), std::runtime_error);
}

TEST_CASE("residue series is monotone in D") {
  ResidueSeries a = residue_series(500, 1.0);
  ResidueSeries b = residue_series(2000, 1.0);
  CHECK(a.partial_sum.lo() <= b.partial_sum.lo());
  CHECK(a.partial_sum.hi() <= b.partial_sum.hi());
}

TEST_CASE("restricted sum is consistent with per-field constants R(K)/d^2") {
  std::vector<long long> fields = {-3, -4, 5, 8};
  Interval series_route = restricted_residue_sum(fields, 1e-7);
  Interval field_route(series_route.precision());
  for (long long d : fields) {
    QuadraticField k(d);
    field_route += k.ext_count_constant(1e-7) /
                   Interval::exact(d).pow_int(2);
  }
  CHECK(series_route.overlaps(field_route));
}

TEST_CASE("rank bound instances over Q") {
  auto b1 = ell_rank_bound({std::nullopt, 2, {2}});
  CHECK(b1.s_exponent == 3);
  CHECK(b1.bound == 7);
  auto b2 = ell_rank_bound({std::nullopt, 2, {2, 3}});
  CHECK(b2.s_exponent == 4);
  CHECK(b2.bound == 15);
  auto b3 = ell_rank_bound({std::nullopt, 2, {5}});
  CHECK(b3.s_exponent == 4);
  CHECK(b3.bound == 15);
}

TEST_CASE("exact ramified counts: three routes agree") {
  CHECK(exact_quadratic_ramified_count({2}) == 3);
  CHECK(exact_quadratic_ramified_count({3}) == 1);
  CHECK(exact_quadratic_ramified_count({}) == 0);
  for (std::vector<long long> s :
       {std::vector<long long>{2}, {3}, {5}, {2, 3}, {2, 5}, {3, 5}, {2, 3, 5},
        {7, 11}}) {
    long long closed = exact_quadratic_ramified_count(s);
    long long products = exact_quadratic_ramified_count_products(s);
    CHECK(closed == products);
    long long bound = 8;
    for (long long p : s) bound *= p;
    CHECK(exact_quadratic_ramified_count_sieve(s, bound) == closed);
    CHECK(closed <= ell_rank_bound({std::nullopt, 2, s}).bound);
  }
}

TEST_CASE("rank bound over a quadratic base dominates the Kummer count") {
  // quadratic extensions of Q(i) unramified outside the primes over 5:
  // delta built from i and the primes over 5, with trivial 2-part
  QuadraticField qi(-4);
  auto classes = squarefree_elements(qi, 25);
  long long count = 0;
  for (auto& c : classes) {
    bool only5 = true;
    for (auto& [p, conj] : c.id.primes) only5 = only5 && p == 5;
    if (!only5) continue;
    if (relative_discriminant(qi, c.delta) % 2 == 0) continue;
    ++count;
  }
  auto rb = ell_rank_bound({-4, 2, {5}});
  CHECK(rb.s_exponent == 6);  // 0 + 2 + 4 + 0
  CHECK(count <= rb.bound);
  CHECK(count >= 1);
}

TEST_CASE("slope fit recovers synthetic exponents") {
  std::vector<std::pair<double, double>> lin, pow34;
  for (double x : {1e2, 1e3, 1e4, 1e5, 1e6}) {
    lin.emplace_back(x, x);
    pow34.emplace_back(x, std::pow(x, 0.75));
  }
  CHECK(std::fabs(slope_fit(lin).exponent - 1.0) < 1e-9);
  CHECK(std::fabs(slope_fit(pow34).exponent - 0.75) < 1e-9);

  // multiplicative 1% noise, fixed seed
  std::mt19937_64 rng(0xC2A4);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<std::pair<double, double>> noisy;
  for (double x : {1e2, 1e3, 1e4, 1e5, 1e6})
    noisy.emplace_back(x, std::pow(x, 0.85) * (1.0 + noise(rng)));
  CHECK(std::fabs(slope_fit(noisy).exponent - 0.85) < 0.02);

  // log-mode fit recovers a pure power law with b ~ 0
  SlopeFit lm = slope_fit(lin, true);
  CHECK(std::fabs(lm.exponent - 1.0) < 1e-6);
  CHECK(std::fabs(lm.log_power) < 1e-6);
}

TEST_CASE("slope fit input validation") {
  std::vector<std::pair<double, double>> few = {{10, 1}, {100, 2}, {1000, 3}};
  CHECK_THROWS_AS(slope_fit(few), std::invalid_argument);
  std::vector<std::pair<double, double>> narrow = {
      {10, 1}, {20, 2}, {30, 3}, {40, 4}};
  CHECK_THROWS_AS(slope_fit(narrow), std::invalid_argument);
  std::vector<std::pair<double, double>> zero = {
      {10, 0}, {100, 2}, {1000, 3}, {10000, 4}};
  CHECK_THROWS_AS(slope_fit(zero), std::invalid_argument);
}

TEST_CASE("y exponent check wiring") {
  std::vector<std::pair<double, double>> zd4, y;
  for (double x : {1e3, 1e4, 1e5, 1e6}) {
    zd4.emplace_back(x, 0.05 * x);
    y.emplace_back(x, 2.0 * std::sqrt(x));
  }
  auto chk = y_exponent_check(zd4, y);
  CHECK(chk.pass);
  CHECK(chk.y_exponent == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(chk.zd4_exponent == doctest::Approx(1.0).epsilon(1e-6));
}
