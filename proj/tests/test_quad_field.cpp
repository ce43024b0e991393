#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "wrc/quad_field.hpp"

using namespace wrc;

TEST_CASE("kronecker symbol basics") {
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(5, 4) == 1);
  CHECK(kronecker(-8, 2) == 0);
  CHECK(kronecker(12, 3) == 0);
  for (long long d : {-4LL, 5LL, -3LL, 8LL, -7LL}) {
    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
      if (p == std::llabs(d) || d % p == 0) continue;
      // brute-force Legendre symbol
      long long dm = ((d % p) + p) % p;
      int brute = -1;
      for (long long x = 0; x < p; ++x)
        if (x * x % p == dm) brute = (dm == 0) ? 0 : 1;
      CHECK(kronecker(d, p) == brute);
    }
  }
}

TEST_CASE("kronecker is multiplicative and periodic") {
  std::mt19937_64 rng(23);
  for (long long d : {-4LL, 5LL, -3LL, 8LL, 13LL, -20LL, 21LL}) {
    for (int it = 0; it < 50; ++it) {
      long long m = 1 + rng() % 300, n = 1 + rng() % 300;
      CHECK(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
      CHECK(kronecker(d, n + std::llabs(d)) == kronecker(d, n));
    }
  }
}

TEST_CASE("fundamental discriminants") {
  CHECK(fundamental_discs(10) ==
        std::vector<long long>{-3, -4, 5, -7, 8, -8});
  CHECK(fundamental_discs(3) == std::vector<long long>{-3});
  CHECK(fundamental_discs(1).empty());
  CHECK(is_fundamental_discriminant(-4));
  CHECK(!is_fundamental_discriminant(1));
  CHECK(!is_fundamental_discriminant(-2));
  CHECK(!is_fundamental_discriminant(45));

  // counting agrees with the per-integer predicate (independent oracle)
  long long x = 500;
  long long oracle = 0;
  for (long long d = -4 * x; d <= 4 * x; ++d)
    if (std::llabs(d) <= x && is_fundamental_discriminant(d)) ++oracle;
  CHECK(count_quadratic_q(x) == oracle);
  CHECK(static_cast<size_t>(oracle) == fundamental_discs(x).size());
  CHECK(count_quadratic_q(10) == 6);
  CHECK(count_quadratic_q(1) == 0);
  CHECK(count_quadratic_q(100) <= count_quadratic_q(200));
}

TEST_CASE("field construction rejects non-fundamental input") {
  CHECK_THROWS_AS(QuadraticField(1), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticField(12 * 4), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticField(-2), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticField(0), std::invalid_argument);
}

TEST_CASE("class numbers by reduced forms") {
  CHECK(QuadraticField(-4).class_number() == 1);
  CHECK(QuadraticField(-23).class_number() == 3);
  CHECK(QuadraticField(-47).class_number() == 5);
  CHECK(QuadraticField(-163).class_number() == 1);
  CHECK(QuadraticField(-20).class_number() == 2);
  CHECK(QuadraticField(5).class_number() == 1);
  CHECK(QuadraticField(8).class_number() == 1);
  CHECK(QuadraticField(12).class_number() == 1);
  CHECK(QuadraticField(40).class_number() == 2);
  CHECK(QuadraticField(60).class_number() == 2);
  CHECK(QuadraticField(229).class_number() == 3);
}

TEST_CASE("fundamental units from continued fractions") {
  auto u8 = QuadraticField(8).fundamental_unit();
  CHECK(u8.t == 2);
  CHECK(u8.u == 2);  // (2 + 2 sqrt 2)/2 = 1 + sqrt 2
  CHECK(u8.norm == -1);

  auto u5 = QuadraticField(5).fundamental_unit();
  CHECK(u5.t == 1);
  CHECK(u5.u == 1);
  CHECK(u5.norm == -1);

  auto u12 = QuadraticField(12).fundamental_unit();
  CHECK(u12.t == 4);  // 2 + sqrt 3
  CHECK(u12.u == 2);
  CHECK(u12.norm == 1);

  auto u13 = QuadraticField(13).fundamental_unit();
  CHECK(u13.t == 3);
  CHECK(u13.u == 1);
  CHECK(u13.norm == -1);

  CHECK_THROWS_AS(QuadraticField(-4).fundamental_unit(), std::domain_error);
}

TEST_CASE("narrow vs wide class numbers") {
  // norm +1 unit: narrow = 2 * wide
  QuadraticField k12(12);
  CHECK(k12.narrow_class_number() == 2 * k12.class_number());
  // norm -1 unit: equal
  QuadraticField k5(5);
  CHECK(k5.narrow_class_number() == k5.class_number());
}

TEST_CASE("L-values at s=1 match closed forms") {
  Interval pi = Interval::pi();
  Interval l4 = l_value(-4, 1).value;
  CHECK(l4.overlaps(pi / Interval::exact(4)));
  CHECK(l4.width() < 1e-20);

  Interval l3 = l_value(-3, 1).value;
  CHECK(l3.overlaps(pi / (Interval::exact(3) * Interval::exact(3).sqrt())));

  // L(1, chi_5) = 2 log((1+sqrt5)/2)/sqrt5
  Interval phi = (Interval::exact(1) + Interval::exact(5).sqrt()) /
                 Interval::exact(2);
  Interval expect5 = Interval::exact(2) * phi.log() / Interval::exact(5).sqrt();
  CHECK(l_value(5, 1).value.overlaps(expect5));

  // L(1, chi_8) = 2 log(1+sqrt2)/sqrt8
  Interval expect8 = Interval::exact(2) *
                     (Interval::exact(1) + Interval::exact(2).sqrt()).log() /
                     Interval::exact(8).sqrt();
  CHECK(l_value(8, 1).value.overlaps(expect8));
}

TEST_CASE("L(2) by direct summation") {
  // L(2, chi_{-4}) is Catalan's constant
  Interval cat = l_value(-4, 2, 1e-7).value;
  CHECK(cat.contains(0.915965594177219015));
  CHECK(cat.width() < 3e-7);
  // tolerance beyond the budget raises
  CHECK_THROWS_WITH_AS(l_value(-4, 2, 1e-12), doctest::Contains("required N"),
                       std::runtime_error);
  // enclosures contain the recomputation at 10x the budget
  for (long long d : {-4LL, 5LL, -7LL, 8LL, -3LL}) {
    Interval coarse = l_value(d, 2, 1e-4).value;
    Interval fine = l_value(d, 2, 1e-5).value;
    CHECK(coarse.contains(fine.mid()));
    CHECK(fine.width() < coarse.width());
  }
}

TEST_CASE("residue of the Dedekind zeta function, two routes") {
  CHECK(QuadraticField(-4).residue_zeta().contains(0.7853981633974483));
  CHECK(QuadraticField(-3).residue_zeta().contains(0.6045997880780726));
  // Q(sqrt5): 2 log phi / sqrt 5
  Interval phi = (Interval::exact(1) + Interval::exact(5).sqrt()) /
                 Interval::exact(2);
  Interval expect = Interval::exact(2) * phi.log() / Interval::exact(5).sqrt();
  CHECK(QuadraticField(5).residue_zeta().overlaps(expect));
  // agreement of the two routes across a small sweep
  for (long long d : fundamental_discs(300)) {
    QuadraticField k(d);
    CHECK_NOTHROW(k.residue_zeta());
  }
}

TEST_CASE("zeta_K(2) and the counting constant R(K)") {
  QuadraticField qi(-4);
  Interval z2 = qi.zeta2(1e-7);
  CHECK(z2.contains(1.5067030099529425));  // zeta(2) * Catalan
  Interval r = qi.ext_count_constant(1e-7);
  CHECK(r.contains(0.2606354));
  // zeta_K(2) in (1, zeta(2)^2] for every field
  Interval z2sq = Interval::pi().pow_int(4) / Interval::exact(36);
  for (long long d : fundamental_discs(60)) {
    Interval v = QuadraticField(d).zeta2(1e-4);
    CHECK(v.certainly_gt(1.0));
    CHECK(v.lo() <= z2sq.hi());
  }
}

TEST_CASE("residuum bound holds with room") {
  auto r1 = QuadraticField(-4).residuum_check(1.0);
  CHECK(r1.ok);
  CHECK(r1.rhs == doctest::Approx(32.0).epsilon(1e-6));
  auto r2 = QuadraticField(-3).residuum_check(0.25);
  CHECK(r2.ok);
  CHECK(r2.rhs == doctest::Approx(42.11).epsilon(1e-3));
  // monotone in eps on a few fields
  for (long long d : {-4LL, -3LL, 5LL, 8LL}) {
    QuadraticField k(d);
    CHECK(k.residuum_check(1.0).ok);
    CHECK(k.residuum_check(0.5).ok);
    CHECK(k.residuum_check(0.25).ok);
  }
}

TEST_CASE("class bound ratio") {
  CHECK(class_bound_ratio(-4) == doctest::Approx(0.3607).epsilon(1e-3));
  CHECK(class_bound_ratio(-23) == doctest::Approx(0.1995).epsilon(1e-2));
  double max_ratio = 0;
  long long argmax = 0;
  for (long long d : fundamental_discs(2000)) {
    double r = class_bound_ratio(d);
    if (r > max_ratio) {
      max_ratio = r;
      argmax = d;
    }
  }
  CHECK(argmax == -3);
  CHECK(max_ratio < 1.0);
}

TEST_CASE("analytic and exact class numbers agree on a small sweep") {
  for (long long d : fundamental_discs(400)) {
    QuadraticField k(d);
    Interval l1 = l_value(d, 1).value;
    Interval h;
    if (d < 0) {
      h = Interval::exact(k.roots_of_unity()) *
          Interval::exact(-d).sqrt() * l1 /
          (Interval::exact(2) * Interval::pi());
    } else {
      h = Interval::exact(d).sqrt() * l1 /
          (Interval::exact(2) * k.regulator());
    }
    CHECK(h.width() < 1.0);
    CHECK(std::llround(h.mid()) == k.class_number());
  }
}

TEST_CASE("prime elements of class-number-one fields") {
  QuadraticField qi(-4);
  auto primes = qi.prime_elements(10);
  // norms 2, 5, 5, 9: ramified 2, split 5 twice, inert 3
  std::multiset<long long> norms;
  for (auto& p : primes) norms.insert(std::llabs(p.norm));
  CHECK(norms == std::multiset<long long>{2, 5, 5, 9});
  // the two primes over 5 are conjugate, not associate
  std::vector<QuadElt> over5;
  for (auto& p : primes)
    if (p.p == 5) over5.push_back(p.elt);
  REQUIRE(over5.size() == 2);
  QuadElt prod = qi.mul(over5[0], qi.conj(over5[1]));
  CHECK((prod.a % 5 != 0 || prod.b % 5 != 0));

  QuadraticField q2(8);
  auto p2 = q2.prime_elements(7);
  std::multiset<long long> n2;
  for (auto& p : p2) n2.insert(std::llabs(p.norm));
  CHECK(n2 == std::multiset<long long>{2, 7, 7});
  // the class of sqrt(2) (coords {0,1}) appears
  bool has_sqrt2 = false;
  for (auto& p : p2) {
    QuadElt q = q2.mul(p.elt, q2.conj(QuadElt{0, 1}));
    if (std::llabs(p.norm) == 2 && q.a % 2 == 0 && q.b % 2 == 0)
      has_sqrt2 = true;
  }
  CHECK(has_sqrt2);

  CHECK_THROWS_WITH_AS(QuadraticField(-20).prime_elements(10),
                       doctest::Contains("class number"), std::runtime_error);
}

TEST_CASE("element arithmetic in the (1, omega) basis") {
  QuadraticField q5(5);
  QuadElt omega{0, 1};
  CHECK(q5.norm(omega) == -1);
  CHECK(q5.trace(omega) == 1);
  QuadElt sq = q5.mul(omega, omega);  // omega^2 = omega + 1
  CHECK(sq == QuadElt{1, 1});
  CHECK(q5.is_square_elt(sq));
  // 5 = (2*omega - 1)^2 = (sqrt 5)^2 is a square and gets rejected as delta
  QuadElt five = q5.mul(QuadElt{-1, 2}, QuadElt{-1, 2});
  CHECK(five == QuadElt{5, 0});
  CHECK(q5.is_square_elt(QuadElt{5, 0}));
  CHECK(!q5.is_square_elt(QuadElt{0, 1}));

  QuadraticField qi(-4);
  CHECK(qi.norm(QuadElt{2, 1}) == 5);
  CHECK(!qi.is_square_elt(QuadElt{0, 1}));
  CHECK(qi.is_square_elt(QuadElt{-1, 0}));  // -1 = i^2
}
