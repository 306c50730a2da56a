#include <catch_amalgamated.hpp>

#include "reslat/fixtures.hpp"

using namespace reslat;

namespace {

Algebra trivial_algebra() {
  Algebra A;
  A.name = "trivial";
  A.n = 1;
  A.labels = {"*"};
  A.zero = A.one = 0;
  A.join_t = A.meet_t = A.prod_t = A.impl_t = {0};
  return A;
}

}  // namespace

TEST_CASE("axiom sweep accepts every fixture") {
  for (const std::string& name : fixture_names()) {
    const Algebra A = fixture(name);
    const VerifyReport rep = verify_axioms(A);
    INFO(name);
    CHECK(rep.structural.empty());
    CHECK(rep.violations.empty());
  }
  CHECK(verify_axioms(trivial_algebra()).ok());
}

TEST_CASE("axiom sweep rejects a tampered residuum") {
  Algebra A = fixture("g6");
  A.impl_t[1 * 6 + 2] = 3;  // impl(a,b): b -> c
  const VerifyReport rep = verify_axioms(A);
  REQUIRE(rep.structural.empty());
  REQUIRE_FALSE(rep.violations.empty());
  bool residuation_hit = false;
  for (const Violation& v : rep.violations)
    if (v.law == "residuation") residuation_hit = true;
  CHECK(residuation_hit);
}

TEST_CASE("axiom sweep reports structural defects before laws") {
  Algebra A = fixture("chain2");
  SECTION("wrong table size") {
    A.prod_t.pop_back();
    const VerifyReport rep = verify_axioms(A);
    CHECK_FALSE(rep.structural.empty());
    CHECK(rep.violations.empty());
  }
  SECTION("out-of-range entry") {
    A.impl_t[0] = 7;
    CHECK_FALSE(verify_axioms(A).structural.empty());
  }
  SECTION("duplicate labels") {
    A.labels[0] = A.labels[1];
    CHECK_FALSE(verify_axioms(A).structural.empty());
  }
  SECTION("bounds out of range") {
    A.one = 9;
    CHECK_FALSE(verify_axioms(A).structural.empty());
  }
}

TEST_CASE("negation and biimplication on the six-element example") {
  const Algebra A = fixture("g6");
  // labels 0,a,b,c,d,1 at indices 0..5
  CHECK(A.neg(0) == 5);
  CHECK(A.neg(1) == 0);
  CHECK(A.neg(2) == 3);
  CHECK(A.neg(3) == 2);
  CHECK(A.neg(4) == 2);
  CHECK(A.neg(5) == 0);
  CHECK(A.biimpl(3, 4) == 1);  // c <-> d = a
  CHECK(leq(A, 2, 1));         // b <= a
  CHECK_FALSE(leq(A, 2, 3));   // b, c incomparable
  CHECK(neg(A, 4) == 2);
  CHECK(biimpl(A, 3, 4) == 1);
}

TEST_CASE("powers and element order") {
  const Algebra g6 = fixture("g6");
  CHECK(power(g6, 3, 0) == g6.one);
  CHECK(power(g6, 3, 1) == 3);
  CHECK(power(g6, 3, 2) == 4);  // c * c = d
  CHECK(ord(g6, 0) == 1);
  for (Element a = 1; a < 6; ++a) {
    INFO(g6.label(a));
    CHECK_FALSE(ord(g6, a).has_value());
  }

  const Algebra luk3 = fixture("lukasiewicz3");
  CHECK(ord(luk3, 0) == 1);
  CHECK(ord(luk3, 1) == 2);
  CHECK_FALSE(ord(luk3, 2).has_value());

  const Algebra luk4 = fixture("lukasiewicz4");
  CHECK(ord(luk4, 0) == 1);
  CHECK(ord(luk4, 1) == 2);
  CHECK(ord(luk4, 2) == 3);
  CHECK_FALSE(ord(luk4, 3).has_value());

  const Algebra godel3 = fixture("godel3");
  CHECK(ord(godel3, 0) == 1);
  CHECK_FALSE(ord(godel3, 1).has_value());

  // In the one-element algebra a^0 = 1 = 0 already, so the order is 0.
  CHECK(ord(trivial_algebra(), 0) == 0);
  CHECK_THROWS_AS(power(fixture("chain2"), 0, -1), std::invalid_argument);
}

TEST_CASE("element classification") {
  const Algebra g6 = fixture("g6");
  CHECK(classify_element(g6, 0).nilpotent);
  CHECK_FALSE(classify_element(g6, 0).finite);  // neg 0 = 1 has infinite order
  CHECK(classify_element(g6, 1).unity);         // a
  CHECK(classify_element(g6, 5).unity);         // 1
  for (Element x : {0, 2, 3, 4}) {
    INFO(g6.label(x));
    CHECK_FALSE(classify_element(g6, x).unity);
  }

  const Algebra luk3 = fixture("lukasiewicz3");
  CHECK(classify_element(luk3, 1).nilpotent);
  CHECK(classify_element(luk3, 1).finite);  // neg(1/2) = 1/2 is nilpotent too
  CHECK_FALSE(classify_element(luk3, 1).unity);
  CHECK(classify_element(luk3, 2).unity);
}

TEST_CASE("generated subalgebras") {
  const Algebra g6 = fixture("g6");
  const SubalgebraResult whole = subalgebra_generated(g6, {2});  // <b>
  CHECK(whole.algebra.n == 6);

  const SubalgebraResult three = subalgebra_generated(g6, {1});  // <a>
  REQUIRE(three.embedding == std::vector<Element>{0, 1, 5});
  CHECK(three.algebra.n == 3);
  CHECK(verify_axioms(three.algebra).ok());
  // The embedding is operation-preserving by construction.
  for (Element i = 0; i < three.algebra.n; ++i)
    for (Element j = 0; j < three.algebra.n; ++j) {
      CHECK(three.embedding[three.algebra.prod(i, j)] ==
            g6.prod(three.embedding[i], three.embedding[j]));
      CHECK(three.embedding[three.algebra.impl(i, j)] ==
            g6.impl(three.embedding[i], three.embedding[j]));
    }

  const SubalgebraResult bounds = subalgebra_generated(g6, {});
  CHECK(bounds.embedding == std::vector<Element>{0, 5});
  CHECK_THROWS_AS(subalgebra_generated(g6, {9}), std::invalid_argument);
}

TEST_CASE("lattices from cover relations") {
  SECTION("diamond") {
    const CoverLattice lat =
        lattice_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3);
    REQUIRE(lat.errors.empty());
    CHECK(lat.join_t[1 * 4 + 2] == 3);
    CHECK(lat.meet_t[1 * 4 + 2] == 0);
  }
  SECTION("cycle rejected") {
    const CoverLattice lat =
        lattice_from_covers(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}, 0, 3);
    CHECK_FALSE(lat.errors.empty());
  }
  SECTION("missing least upper bound rejected") {
    // 0 < {a,b} < {c,d} < 1: upper bounds of {a,b} are {c,d,1}, no least.
    const CoverLattice lat = lattice_from_covers(
        6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, 0, 5);
    CHECK_FALSE(lat.errors.empty());
  }
  SECTION("unreachable bounds rejected") {
    const CoverLattice lat = lattice_from_covers(3, {{0, 2}}, 0, 2);
    CHECK_FALSE(lat.errors.empty());  // element 1 not between the bounds
  }
}

TEST_CASE("element set order and operations") {
  ElemSet a(6), b(6);
  a.set(1);
  a.set(5);
  b.set(2);
  b.set(5);
  CHECK(a.count() == 2);
  CHECK(a < b);  // same size; lowest differing element 1 belongs to a
  CHECK_FALSE(b < a);
  ElemSet c(6);
  c.set(5);
  CHECK(c < a);  // smaller cardinality first
  CHECK(ElemSet::intersect(a, b).elements() == std::vector<Element>{5});
  CHECK(ElemSet::unite(a, b).count() == 3);
  CHECK(c.subset_of(a));
  CHECK_FALSE(a.subset_of(c));
  CHECK(ElemSet::full(6).count() == 6);
  CHECK(ElemSet::of(6, {0, 3}).elements() == std::vector<Element>{0, 3});
}
