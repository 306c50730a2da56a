#include <catch_amalgamated.hpp>

#include "reslat/fixtures.hpp"
#include "reslat/quotient.hpp"

using namespace reslat;

TEST_CASE("quotient of the six-element example by its radical") {
  const Algebra A = fixture("g6");
  const QuotientResult q = quotient(A, radical(A), "Rad");
  REQUIRE(q.algebra.n == 4);
  CHECK(q.classes == std::vector<std::vector<Element>>{{0}, {1, 5}, {2}, {3, 4}});
  CHECK(q.algebra.labels ==
        std::vector<std::string>{"0/Rad", "a/Rad", "b/Rad", "c/Rad"});
  CHECK(q.algebra.zero == 0);
  CHECK(q.algebra.one == 1);  // the class of a and 1
  CHECK(verify_axioms(q.algebra).ok());
  CHECK(q.project(4) == 3);
  CHECK(q.algebra.name == "g6/Rad");
}

TEST_CASE("class membership properties") {
  const Algebra A = fixture("g6");
  const FilterSet F = ElemSet::of(6, {1, 5});  // {a,1}
  const QuotientResult q = quotient(A, F);
  for (Element a = 0; a < A.n; ++a) {
    CHECK((q.class_of[a] == q.algebra.one) == F.test(a));
    CHECK((q.class_of[a] == q.algebra.zero) == F.test(A.neg(a)));
    for (Element b = 0; b < A.n; ++b)
      CHECK(quotient_order(A, F, a, b) ==
            q.algebra.leq(q.class_of[a], q.class_of[b]));
  }
  CHECK_THROWS_AS(quotient(A, ElemSet::of(6, {2, 5}), "X"), std::invalid_argument);
}

TEST_CASE("quotient by the trivial filter is the identity relabeled") {
  const Algebra A = fixture("godel3");
  const QuotientResult q = quotient(A, trivial_filter(A));
  REQUIRE(q.algebra.n == A.n);
  CHECK(q.algebra.join_t == A.join_t);
  CHECK(q.algebra.prod_t == A.prod_t);
  CHECK(q.algebra.impl_t == A.impl_t);
}

TEST_CASE("quotient by the improper filter collapses everything") {
  const Algebra A = fixture("g6");
  const QuotientResult q = quotient(A, improper_filter(A));
  CHECK(q.algebra.n == 1);
}

TEST_CASE("projection is a surjective morphism with kernel F") {
  const Algebra A = fixture("g6");
  for (const FilterSet& F : all_filters(A)) {
    const QuotientResult q = quotient(A, F);
    const Morphism h = projection_morphism(A, q);
    CHECK(h.surjective);
    CHECK(kernel_set(A, q.algebra, h.map) == F);
  }
}

TEST_CASE("filter correspondence across a quotient") {
  const Algebra A = fixture("g6");
  const FilterSet rad = radical(A);
  const FilterCorrespondence corr = filter_correspondence(A, rad);
  // Four filters above Rad = {a,1}, matching the four filters of A/Rad.
  CHECK(corr.pairs.size() == 4);
  CHECK(all_filters(corr.quot.algebra).size() == 4);

  const FilterCorrespondence everything = filter_correspondence(A, trivial_filter(A));
  CHECK(everything.pairs.size() == all_filters(A).size());
}

TEST_CASE("canonical surjection between nested quotients") {
  const Algebra A = fixture("g6");
  const FilterSet F = trivial_filter(A);
  const FilterSet G = ElemSet::of(6, {1, 5});
  const Morphism h = canonical_surjection(A, F, G);
  CHECK(h.surjective);
  CHECK_FALSE(h.injective);
  const Morphism same = canonical_surjection(A, G, G);
  CHECK(same.injective);
  CHECK(same.surjective);
  CHECK_THROWS_AS(canonical_surjection(A, G, F), std::invalid_argument);
}

TEST_CASE("second isomorphism theorem on nested filters") {
  const Algebra A = fixture("g6");
  const FilterSet F = ElemSet::of(6, {1, 5});        // {a,1}
  const FilterSet G = ElemSet::of(6, {1, 2, 5});     // {a,b,1}
  const SecondIsomorphism iso = second_isomorphism_check(A, F, G);
  CHECK(iso.holds);
  CHECK(iso.iso.injective);
  CHECK(iso.iso.surjective);

  // Every nested pair of filters on every fixture.
  for (const std::string& name : fixture_names()) {
    const Algebra B = fixture(name);
    const auto filters = all_filters(B);
    for (const FilterSet& X : filters)
      for (const FilterSet& Y : filters)
        if (X.subset_of(Y)) {
          INFO(name);
          CHECK(second_isomorphism_check(B, X, Y).holds);
        }
  }
}

TEST_CASE("quotients by subfilters of the radical preserve Max and the radical") {
  for (const std::string& name : fixture_names()) {
    const Algebra A = fixture(name);
    const FilterSet rad = radical(A);
    const std::size_t max_count = max_filters(A).size();
    for (const FilterSet& F : all_filters(A)) {
      if (!F.subset_of(rad) || !is_proper(A, F)) continue;
      const QuotientResult q = quotient(A, F);
      INFO(name);
      CHECK(max_filters(q.algebra).size() == max_count);
      // Rad(A/F) = Rad(A)/F as sets of classes.
      FilterSet rad_image(q.algebra.n);
      for (Element a : rad.elements()) rad_image.set(q.class_of[a]);
      CHECK(radical(q.algebra) == rad_image);
    }
  }
}

TEST_CASE("quotients by subfilters of the dense filter preserve order and zero") {
  for (const std::string& name : fixture_names()) {
    const Algebra A = fixture(name);
    const FilterSet ds = dense_filter(A);
    for (const FilterSet& F : all_filters(A)) {
      if (!F.subset_of(ds)) continue;
      const QuotientResult q = quotient(A, F);
      INFO(name);
      for (Element a = 0; a < A.n; ++a) {
        CHECK(ord(A, a) == ord(q.algebra, q.class_of[a]));
        CHECK((q.class_of[a] == q.algebra.zero) == (a == A.zero));
      }
      // Ds(A/F) = Ds(A)/F.
      FilterSet ds_image(q.algebra.n);
      for (Element a : ds.elements()) ds_image.set(q.class_of[a]);
      CHECK(dense_filter(q.algebra) == ds_image);
    }
  }
}

TEST_CASE("morphisms descend to quotients by dense filters") {
  const ProductAlgebra P = direct_product({fixture("g6"), fixture("chain2")});
  const Morphism down = dense_functor_map(P.projections[0]);
  CHECK(down.surjective);
  // G6 x chain2 has dense filter Ds(G6) x Ds(chain2), so the quotient keeps
  // one class per (class of G6/Ds, class of chain2/Ds) pair.
  CHECK(down.source.n == 8);
  CHECK(down.target.n == 4);

  const Algebra A = fixture("godel3");
  const Morphism id = Morphism::make(A, A, {0, 1, 2});
  const Morphism dd = dense_functor_map(id);
  CHECK(dd.injective);
  CHECK(dd.surjective);
}
