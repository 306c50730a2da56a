#include <catch_amalgamated.hpp>

#include "reslat/boolean_center.hpp"
#include "reslat/fixtures.hpp"
#include "reslat/products.hpp"

using namespace reslat;

TEST_CASE("Boolean centers of the fixtures") {
  const Algebra g6 = fixture("g6");
  CHECK(boolean_center(g6).members == std::vector<Element>{0, 5});
  CHECK(boolean_center(fixture("chain2")).members == std::vector<Element>{0, 1});
  CHECK(boolean_center(fixture("godel3")).members == std::vector<Element>{0, 2});
  CHECK(boolean_center(fixture("lukasiewicz3")).members == std::vector<Element>{0, 2});
  CHECK(boolean_center(fixture("boolean4")).members ==
        std::vector<Element>{0, 1, 2, 3});
  const Algebra g3sq = direct_product({fixture("godel3"), fixture("godel3")}).algebra;
  CHECK(boolean_center(g3sq).members.size() == 4);
}

TEST_CASE("relative algebra over a central element") {
  const Algebra b4 = fixture("boolean4");
  const RelativeAlgebra rel = relative_algebra(b4, 2);  // e = (1,0)
  REQUIRE(rel.carrier == std::vector<Element>{2, 3});
  CHECK(rel.algebra.n == 2);
  CHECK(rel.algebra.zero == 0);
  CHECK(rel.algebra.one == 1);
  CHECK(verify_axioms(rel.algebra).ok());
  REQUIRE(find_isomorphism(rel.algebra, fixture("chain2")).has_value());
  CHECK(rel.algebra.name == "boolean4[(1,0)]");

  // <0> is the whole algebra; <1> is trivial.
  const Algebra g6 = fixture("g6");
  CHECK(relative_algebra(g6, 0).algebra.n == 6);
  CHECK(relative_algebra(g6, 5).algebra.n == 1);
  CHECK(relative_algebra(g6, 0).algebra.impl_t == g6.impl_t);
  CHECK_THROWS_AS(relative_algebra(g6, 1), std::invalid_argument);  // a not central
}

TEST_CASE("filters restrict to relative algebras") {
  const Algebra b4 = fixture("boolean4");
  const RelativeAlgebra rel = relative_algebra(b4, 2);
  for (const FilterSet& F : all_filters(b4)) {
    const FilterSet r = restrict_filter(b4, rel, F);
    CHECK(is_filter(rel.algebra, r));
  }
  const Algebra g6 = fixture("g6");
  const RelativeAlgebra whole = relative_algebra(g6, 0);
  CHECK(restrict_filter(g6, whole, radical(g6)).elements() ==
        std::vector<Element>{1, 5});
}

TEST_CASE("congruence restriction to a relative algebra") {
  const Algebra b4 = fixture("boolean4");
  for (const FilterSet& F : all_filters(b4)) {
    for (Element e : boolean_center(b4).members) {
      INFO("e = " << b4.label(e));
      CHECK(congruence_restriction_check(b4, F, e));
    }
  }
  const Algebra g6 = fixture("g6");
  for (const FilterSet& F : all_filters(g6)) {
    CHECK(congruence_restriction_check(g6, F, 0));
    CHECK(congruence_restriction_check(g6, F, 5));
  }
}

TEST_CASE("idempotent lifting fails on the six-element example") {
  const Algebra A = fixture("g6");
  const LiftingReport rep = has_lifting(A);
  CHECK_FALSE(rep.lifts);
  CHECK(rep.witness == "b/Rad");
  CHECK(rep.center.members == std::vector<Element>{0, 5});
  REQUIRE(rep.quotient_center.members.size() == 4);  // all of A/Rad
  CHECK(rep.unliftable.size() == 2);
  REQUIRE(rep.lifted.size() == 2);
  CHECK(rep.lifted[0] == std::pair<Element, Element>{0, 0});
  CHECK(rep.lifted[1] == std::pair<Element, Element>{5, 1});

  CHECK(lift_idempotent(A, 2) == std::nullopt);  // the class b/Rad
  CHECK(lift_idempotent(A, 0) == 0);
  CHECK(lift_idempotent(A, 1) == 5);
  CHECK_THROWS_AS(lift_idempotent(A, 9), std::invalid_argument);
}

TEST_CASE("idempotent lifting succeeds on products of chains") {
  for (const std::string& name :
       {std::string("chain2"), std::string("godel3"), std::string("lukasiewicz3"),
        std::string("boolean4"), std::string("godel4")}) {
    INFO(name);
    CHECK(has_lifting(fixture(name)).lifts);
  }
  const Algebra mixed =
      direct_product({fixture("godel3"), fixture("lukasiewicz4")}).algebra;
  const LiftingReport rep = has_lifting(mixed);
  CHECK(rep.lifts);
  // B(A/Rad) is the 4-element Boolean algebra; every member lifts.
  CHECK(rep.quotient_center.members.size() == 4);
  for (Element f : rep.quotient_center.members)
    CHECK(lift_idempotent(mixed, f).has_value());
}

TEST_CASE("Boolean restriction of a morphism") {
  const ProductAlgebra P = direct_product({fixture("g6"), fixture("chain2")});
  const BooleanMap bm = boolean_restriction(P.projections[0]);
  CHECK(bm.domain.members.size() == 4);   // B(g6 x chain2) = B(g6) x B(chain2)
  CHECK(bm.codomain.members.size() == 2);
  CHECK(bm.surjective);
  CHECK_FALSE(bm.injective);

  const Algebra A = fixture("godel3");
  const BooleanMap idm = boolean_restriction(Morphism::make(A, A, {0, 1, 2}));
  CHECK(idm.injective);
  CHECK(idm.surjective);
}
