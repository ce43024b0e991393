#include <doctest.h>

#include <stdexcept>

#include <set>

#include "wrc/towers.hpp"

using namespace wrc;

TEST_CASE("unit square classes") {
  QuadraticField qi(-4);
  auto ui = unit_square_classes(qi);
  REQUIRE(ui.size() == 2);
  CHECK(ui[0] == QuadElt{1, 0});
  CHECK(ui[1] == QuadElt{0, 1});  // i

  QuadraticField q3(-3);
  auto u3 = unit_square_classes(q3);
  REQUIRE(u3.size() == 2);
  CHECK(!q3.is_square_elt(QuadElt{-1, 0}));

  QuadraticField q5(5);
  auto u5 = unit_square_classes(q5);
  REQUIRE(u5.size() == 4);
  // pairwise inequivalent mod squares: u_i * u_j is a nonsquare for i != j
  for (size_t i = 0; i < u5.size(); ++i)
    for (size_t j = i + 1; j < u5.size(); ++j)
      CHECK(!q5.is_square_elt(q5.mul(u5[i], u5[j])));
}

TEST_CASE("square classes over Q(i) with tiny bound") {
  QuadraticField qi(-4);
  auto classes = squarefree_elements(qi, 2);
  CHECK(classes.size() == 3);  // i, (1+i), i(1+i)
  std::set<SquareClassId> ids;
  for (auto& c : classes) ids.insert(c.id);
  CHECK(ids.size() == 3);
}

TEST_CASE("relative discriminants match worked examples") {
  QuadraticField qi(-4);
  // delta = i: L = Q(zeta_8), N(d_{L/K}) = 16
  CHECK(relative_discriminant(qi, QuadElt{0, 1}) == 16);
  // delta = -3: L = Q(i, sqrt 3), N = 9 (and 3 is the same square class)
  CHECK(relative_discriminant(qi, QuadElt{-3, 0}) == 9);
  CHECK(relative_discriminant(qi, QuadElt{3, 0}) == 9);

  QuadraticField q5(5);
  // delta = -1: L = Q(sqrt5, i), N = 16
  CHECK(relative_discriminant(q5, QuadElt{-1, 0}) == 16);

  QuadraticField q8(8);
  // delta = 2 + sqrt 2: L = Q(zeta_16)^+, |d_L| = 2048 = 64 * 32
  CHECK(relative_discriminant(q8, QuadElt{2, 1}) == 32);
  // delta = epsilon = 1 + sqrt 2: quartic field of discriminant -1024
  CHECK(relative_discriminant(q8, QuadElt{1, 1}) == 16);

  // square and non-squarefree inputs are rejected
  CHECK_THROWS_AS(relative_discriminant(q5, QuadElt{5, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(relative_discriminant(qi, QuadElt{0, 2}),  // 2i = -i(1+i)^2
                  std::invalid_argument);
}

TEST_CASE("galois types") {
  QuadraticField qi(-4);
  CHECK(galois_type(qi, QuadElt{0, 1}) == GaloisType::kV4);   // i
  CHECK(galois_type(qi, QuadElt{2, 1}) == GaloisType::kD4);   // 2+i
  QuadraticField q8(8);
  CHECK(galois_type(q8, QuadElt{2, 1}) == GaloisType::kC4);   // 2+sqrt2
  CHECK(galois_type(q8, QuadElt{1, 1}) == GaloisType::kD4);   // the unit
  QuadraticField q5(5);
  CHECK(galois_type(q5, QuadElt{-1, 0}) == GaloisType::kV4);  // -1
}

TEST_CASE("tower witnesses") {
  QuadraticField qi(-4);
  auto w1 = lemma_tower_witness(qi, QuadElt{2, 1});
  REQUIRE(w1.has_value());
  CHECK(*w1 == 5);
  CHECK(!lemma_tower_witness(qi, QuadElt{0, 1}).has_value());
  QuadraticField q8(8);
  CHECK(!lemma_tower_witness(q8, QuadElt{2, 1}).has_value());
}

TEST_CASE("coprime part") {
  CHECK(coprime_part(360, {2, 3}) == 5);
  CHECK(coprime_part(7, {7}) == 1);
  CHECK(coprime_part(100, {3}) == 100);
  CHECK_THROWS_AS(coprime_part(0, {2}), std::invalid_argument);
}

TEST_CASE("counting towers over Q(i) at small bounds") {
  TowerCount tc = count_towers({-4}, 150, CountMode::kTower);
  CHECK(tc.z_tilde == 1);
  CHECK(tc.z_d4 == 0);
  CHECK(tc.y == 1);
  auto dump = enumerate_tower_set({-4}, 150);
  REQUIRE(dump.size() == 1);
  CHECK(dump[0].tower_disc == 144);
  CHECK(dump[0].type == GaloisType::kV4);

  // nothing at x = 100: every class has tower_disc > 100 (exhaustive sweep)
  TowerCount none = count_towers({-4}, 100, CountMode::kTower);
  CHECK(none.z_tilde == 0);
  for (auto& c : squarefree_elements(QuadraticField(-4), 50))
    CHECK(c.tower_disc > 100);
}

TEST_CASE("tower mode counts pairs, field mode counts fields") {
  // Q(zeta_8) over each of its three quadratic subfields
  std::vector<long long> fields = {-4, 8, -8};
  TowerCount towers = count_towers(fields, 256, CountMode::kTower);
  TowerCount distinct = count_towers(fields, 256, CountMode::kField);
  CHECK(towers.z_tilde == 3);
  CHECK(distinct.z_tilde == 1);
  CHECK(towers.y == 3);
  CHECK(distinct.y == 1);
}

TEST_CASE("square class ids separate fields and dedup respects invariants") {
  QuadraticField qi(-4);
  auto classes = enumerate_towers(qi, 2000);
  std::set<SquareClassId> ids;
  for (auto& c : classes) {
    CHECK(ids.insert(c.id).second);  // ids unique
    CHECK(c.tower_disc == 16 * c.rel_disc_norm);
    if (c.witness) CHECK(c.type == GaloisType::kD4);
    if (c.type == GaloisType::kV4) {
      long long prod = 1;
      for (long long d : c.subfield_discs) prod *= std::llabs(d);
      CHECK(prod == c.tower_disc);
    }
    if (c.type == GaloisType::kC4) {
      CHECK(c.c4_conductor > 0);
      CHECK(c.c4_conductor * c.c4_conductor * 4 == c.tower_disc);
    }
  }
}

TEST_CASE("counting quadratic extensions by relative discriminant") {
  QuadraticField qi(-4);
  CHECK(count_quadratic_ext(qi, 9) >= 1);   // Q(i, sqrt 3) at norm 9
  CHECK(count_quadratic_ext(qi, 1) == 0);   // no unramified extension: h = 1
  CHECK(count_quadratic_ext(qi, 8) == count_quadratic_ext(qi, 8));
  // monotone
  long long prev = 0;
  for (long long x : {10LL, 50LL, 200LL, 1000LL}) {
    long long c = count_quadratic_ext(qi, x);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("conjugate D4 pairs both count") {
  // 2+i and 2-i give distinct fields with identical invariants
  QuadraticField qi(-4);
  auto classes = enumerate_towers(qi, 100);
  int norm5_d4 = 0;
  for (auto& c : classes)
    if (c.type == GaloisType::kD4 && c.rel_disc_norm % 5 == 0) ++norm5_d4;
  CHECK(norm5_d4 >= 2);
  CHECK(norm5_d4 % 2 == 0);
}

TEST_CASE("enumeration errors on class number > 1") {
  CHECK_THROWS_WITH_AS(count_towers({-20}, 1000, CountMode::kTower),
                       doctest::Contains("-20"), std::runtime_error);
}
