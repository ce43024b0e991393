#include <doctest.h>

#include <stdexcept>

#include <gmpxx.h>

#include <random>

#include "wrc/interval.hpp"

using wrc::Interval;

TEST_CASE("exact values and ratios enclose the rational truth") {
  Interval third = Interval::ratio(1, 3);
  CHECK(third.lo() <= 1.0 / 3.0);
  CHECK(third.hi() >= 1.0 / 3.0);
  CHECK(third.width() < 1e-25);

  Interval v = Interval::exact(7);
  CHECK(v.is_point());
  CHECK(v.contains(7.0));
}

TEST_CASE("arithmetic is outward and keeps lo <= hi") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    long long p1 = static_cast<long long>(rng() % 2000) - 1000;
    long long p2 = static_cast<long long>(rng() % 2000) - 1000;
    long long q1 = 1 + rng() % 50, q2 = 1 + rng() % 50;
    Interval a = Interval::ratio(p1, q1);
    Interval b = Interval::ratio(p2, q2);
    mpq_class qa(static_cast<long>(p1), static_cast<long>(q1));
    mpq_class qb(static_cast<long>(p2), static_cast<long>(q2));
    qa.canonicalize();
    qb.canonicalize();

    auto check_contains = [](const Interval& iv, const mpq_class& truth) {
      double t = truth.get_d();
      CHECK(iv.lo() <= t + 1e-12 * (1 + std::fabs(t)));
      CHECK(iv.hi() >= t - 1e-12 * (1 + std::fabs(t)));
      CHECK(iv.lo() <= iv.hi());
    };
    check_contains(a + b, qa + qb);
    check_contains(a - b, qa - qb);
    check_contains(a * b, qa * qb);
    if (p2 != 0) check_contains(a / b, qa / qb);
  }
}

TEST_CASE("division by an enclosure containing zero throws") {
  Interval a = Interval::exact(1);
  Interval z = Interval::bounds(-1, 1);
  CHECK_THROWS_AS(a / z, std::domain_error);
}

TEST_CASE("pi, sqrt, log, exp enclose reference points") {
  CHECK(Interval::pi().contains(3.14159265358979));
  CHECK(Interval::exact(2).sqrt().contains(1.4142135623730951));
  CHECK(Interval::exact(1).exp().contains(2.718281828459045));
  Interval l = Interval::exact(10).log();
  CHECK(l.contains(2.302585092994046));
  CHECK_THROWS_AS(Interval::exact(-1).sqrt(), std::domain_error);
  CHECK_THROWS_AS(Interval::exact(0).log(), std::domain_error);
}

TEST_CASE("sin at rational multiples of pi hits known values") {
  // sin(pi/6) = 1/2 exactly
  Interval s = Interval::sin_pi_ratio(1, 6);
  CHECK(s.contains(0.5));
  CHECK(s.width() < 1e-20);
  // sin(pi/2) = 1
  CHECK(Interval::sin_pi_ratio(1, 2).contains(1.0));
  // sin(3pi/4) = sqrt(2)/2
  CHECK(Interval::sin_pi_ratio(3, 4).contains(0.7071067811865476));
}

TEST_CASE("intersection and hull") {
  Interval a = Interval::bounds(0, 2);
  Interval b = Interval::bounds(1, 3);
  auto meet = a.intersect(b);
  REQUIRE(meet.has_value());
  CHECK(meet->lo() == 1.0);
  CHECK(meet->hi() == 2.0);
  Interval c = Interval::bounds(5, 6);
  CHECK(!a.intersect(c).has_value());
  Interval h = a.hull(c);
  CHECK(h.lo() == 0.0);
  CHECK(h.hi() == 6.0);
}

TEST_CASE("higher working precision tightens enclosures") {
  Interval coarse = Interval::ratio(1, 7, 32);
  Interval fine = Interval::ratio(1, 7, 192);
  CHECK(fine.width() < coarse.width());
  CHECK(coarse.contains(fine));
}

TEST_CASE("pow_int matches repeated multiplication") {
  Interval x = Interval::ratio(3, 7);
  Interval p = x.pow_int(5);
  mpq_class q(3, 7);
  mpq_class truth = q * q * q * q * q;
  CHECK(p.contains(truth.get_d()));
  Interval inv = x.pow_int(-2);
  mpq_class ti = 1 / (q * q);
  CHECK(inv.contains(ti.get_d()));
}
