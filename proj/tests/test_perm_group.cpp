#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "wrc/perm_group.hpp"

using namespace wrc;

namespace {

PermGroup from(const std::string& a, int degree) {
  return PermGroup::generate({Permutation::parse(a, degree)});
}

PermGroup from(const std::string& a, const std::string& b, int degree) {
  return PermGroup::generate(
      {Permutation::parse(a, degree), Permutation::parse(b, degree)});
}

}  // namespace

TEST_CASE("generation and transitivity") {
  PermGroup s3 = from("(1,2)", "(1,2,3)", 3);
  CHECK(s3.order() == 6);
  CHECK(s3.transitive());

  PermGroup c4 = from("(1,2,3,4)", 4);
  CHECK(c4.order() == 4);
  CHECK(c4.transitive());

  PermGroup flip = from("(1,2)", 3);
  CHECK(flip.order() == 2);
  CHECK(!flip.transitive());
}

TEST_CASE("order cap raises instead of truncating") {
  CHECK_THROWS_WITH_AS(PermGroup::symmetric(8, 100),
                       doctest::Contains("group too large"),
                       std::runtime_error);
}

TEST_CASE("conjugacy classes") {
  ClassTable s3(from("(1,2)", "(1,2,3)", 3));
  std::multiset<long long> sizes;
  for (auto& c : s3.classes()) sizes.insert(c.size);
  CHECK(sizes == std::multiset<long long>{1, 2, 3});

  ClassTable c4(from("(1,2,3,4)", 4));
  CHECK(c4.classes().size() == 4);

  ClassTable d4(from("(1,2,3,4)", "(1,3)", 4));
  CHECK(d4.classes().size() == 5);
}

TEST_CASE("every class has constant ind across its members") {
  for (auto g : {from("(1,2)", "(1,2,3)", 3), from("(1,2,3,4)", "(1,3)", 4),
                 PermGroup::symmetric(5)}) {
    ClassTable table(g);
    for (auto& e : g.elements()) {
      int cls = table.class_of(e);
      CHECK(e.ind() == table.classes()[cls].ind);
    }
  }
}

TEST_CASE("ind and a invariants") {
  CHECK(ind_group(PermGroup::symmetric(3)) == 1);
  CHECK(a_invariant(PermGroup::symmetric(3)) == Rational{1, 1});
  CHECK(ind_group(PermGroup::cyclic(3)) == 2);
  CHECK(a_invariant(PermGroup::cyclic(3)) == Rational{1, 2});
  CHECK(ind_group(from("(1,2,3,4)", "(1,3)", 4)) == 1);
  PermGroup trivial = PermGroup::generate({Permutation::identity(3)});
  CHECK_THROWS_AS(ind_group(trivial), std::runtime_error);
}

TEST_CASE("k-classes merge under power maps") {
  PermGroup c3 = PermGroup::cyclic(3);
  ClassTable t3(c3);
  auto merged_q = k_classes(t3, CyclotomicAction::rationals(3));
  CHECK(merged_q.merged_count == 2);
  auto merged_cyc = k_classes(t3, CyclotomicAction::cyclotomic(3));
  CHECK(merged_cyc.merged_count == 3);

  PermGroup c4 = PermGroup::cyclic(4);
  ClassTable t4(c4);
  CHECK(k_classes(t4, CyclotomicAction::rationals(4)).merged_count == 3);

  CHECK_THROWS_AS(k_classes(t4, CyclotomicAction::rationals(6)),
                  std::invalid_argument);
}

TEST_CASE("identity action is the identity partition; larger U only merges") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<uint16_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<uint16_t>(i);
    std::shuffle(v.begin(), v.end(), rng);
    PermGroup g = PermGroup::generate(
        {Permutation(std::move(v)), Permutation::parse("(1,2)", n)}, 100000);
    ClassTable table(g);
    long long exp = g.exponent();
    auto ident = k_classes(table, CyclotomicAction::cyclotomic(exp));
    CHECK(ident.merged_count == static_cast<int>(table.classes().size()));
    auto full = k_classes(table, CyclotomicAction::rationals(exp));
    CHECK(full.merged_count <= ident.merged_count);
  }
}

TEST_CASE("b invariants") {
  CHECK(b_invariant_q(PermGroup::cyclic(3)) == 1);
  CHECK(b_invariant(PermGroup::cyclic(3), CyclotomicAction::cyclotomic(3)) == 2);
  // a(G) = 1 forces b(Q, G) = 1
  for (auto g : {PermGroup::symmetric(3), PermGroup::symmetric(4),
                 from("(1,2,3,4)", "(1,3)", 4)}) {
    if (ind_group(g) == 1) CHECK(b_invariant_q(g) == 1);
  }
}

TEST_CASE("custom unit subgroups validate") {
  CHECK_THROWS_AS(CyclotomicAction::custom(8, {3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicAction::custom(8, {1, 2}), std::invalid_argument);
  auto u = CyclotomicAction::custom(8, {1, 3});
  CHECK(u.units().size() == 2);
}

TEST_CASE("block systems") {
  auto c4 = PermGroup::cyclic(4);
  auto systems = minimal_block_systems(c4);
  REQUIRE(systems.size() == 1);
  CHECK(systems[0].blocks ==
        std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  CHECK(is_primitive(PermGroup::symmetric(4)));

  auto w = wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(2));
  bool found = false;
  for (auto& s : minimal_block_systems(w))
    if (s.blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}}) found = true;
  CHECK(found);
}

TEST_CASE("wreath products") {
  auto d4 = wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(2));
  CHECK(d4.order() == 8);
  CHECK(d4.degree() == 4);
  // permutation-isomorphic to the dihedral group on 4 points: same element set
  auto dihedral = from("(1,2,3,4)", "(1,3)", 4);
  // relabel: D4 = <(1,3,2,4), (1,2)>? compare orders and transposition classes
  CHECK(dihedral.order() == 8);
  CHECK(d4.has_transposition());

  auto w6 = wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(3));
  CHECK(w6.order() == 24);
  CHECK(w6.degree() == 6);

  CHECK(a_invariant(w6) == Rational{1, 1});
  CHECK(b_invariant_q(w6) == 1);
}

TEST_CASE("wreath decomposition") {
  auto d4 = from("(1,2,3,4)", "(1,3)", 4);
  auto dec = wreath_decompose(d4);
  REQUIRE(dec.has_value());
  CHECK(dec->block_size == 2);
  CHECK(dec->quotient.order() == 2);

  auto s4 = wreath_decompose(PermGroup::symmetric(4));
  REQUIRE(s4.has_value());
  CHECK(s4->block_size == 4);
  CHECK(s4->quotient.order() == 1);

  CHECK(!wreath_decompose(PermGroup::cyclic(4)).has_value());
}

TEST_CASE("decomposition inverts wreath products with full symmetric blocks") {
  for (int e : {2, 3}) {
    for (auto h : {PermGroup::cyclic(2), PermGroup::cyclic(3),
                   PermGroup::symmetric(3)}) {
      auto w = wreath_product(PermGroup::symmetric(e), h);
      auto dec = wreath_decompose(w);
      REQUIRE(dec.has_value());
      CHECK(dec->block_size == e);
      CHECK(dec->quotient.order() == h.order());
      CHECK(dec->quotient.degree() == h.degree());
      // the quotient acts exactly as h on the natural blocks
      for (auto& gen : dec->quotient.generators()) CHECK(h.contains(gen));
    }
  }
}

TEST_CASE("transpositions form one class in transitive groups") {
  for (auto g : {PermGroup::symmetric(4), PermGroup::symmetric(5),
                 from("(1,2,3,4)", "(1,3)", 4),
                 wreath_product(PermGroup::symmetric(3), PermGroup::cyclic(2))}) {
    if (!g.has_transposition()) continue;
    ClassTable table(g);
    int classes_with_t = 0;
    for (auto& c : table.classes())
      if (c.rep.is_transposition()) ++classes_with_t;
    CHECK(classes_with_t == 1);
  }
}

TEST_CASE("invariant report matches the CLI example") {
  auto rep = invariant_report(from("(1,2,3,4)", "(1,3)", 4));
  CHECK(rep.order == 8);
  CHECK(rep.ind == 1);
  CHECK(rep.a == Rational{1, 1});
  CHECK(rep.b_q == 1);
  CHECK(!rep.primitive);
}
