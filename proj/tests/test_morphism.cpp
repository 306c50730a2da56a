#include <catch_amalgamated.hpp>

#include "reslat/fixtures.hpp"
#include "reslat/morphism.hpp"

using namespace reslat;

TEST_CASE("morphism validation") {
  const Algebra A = fixture("godel3");
  CHECK_FALSE(is_morphism(A, A, {0, 1, 2}).has_value());

  // Collapsing the middle upward is a morphism onto the 2-chain image.
  const Algebra two = fixture("chain2");
  CHECK_FALSE(is_morphism(A, two, {0, 1, 1}).has_value());

  // Sending the middle to 0 breaks the residuum (0 -> 0 = 1 but m -> 0 = 0).
  const auto bad = is_morphism(A, two, {0, 0, 1});
  REQUIRE(bad.has_value());

  // Swapping the two incomparable atoms of the six-element example breaks the
  // product table.
  const Algebra g6 = fixture("g6");
  CHECK(is_morphism(g6, g6, {0, 1, 3, 2, 4, 5}).has_value());

  CHECK_THROWS_AS(is_morphism(A, two, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_morphism(A, two, {0, 1, 7}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::make(A, two, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("kernel of a morphism") {
  const Algebra A = fixture("godel3");
  const Algebra two = fixture("chain2");
  const Morphism h = Morphism::make(A, two, {0, 1, 1});
  CHECK(h.surjective);
  CHECK_FALSE(h.injective);
  CHECK(kernel(h).elements() == std::vector<Element>{1, 2});

  const Morphism id = Morphism::make(A, A, {0, 1, 2});
  CHECK(id.injective);
  CHECK(kernel(id) == trivial_filter(A));
}

TEST_CASE("filter transport along morphisms") {
  const Algebra g6 = fixture("g6");
  const Algebra two = fixture("chain2");
  // g6 -> chain2 collapsing the maximal filter {a,b,1} to 1.
  const Morphism h = Morphism::make(g6, two, {0, 1, 1, 0, 0, 1});

  const FilterSet pre = preimage_filter(h, trivial_filter(two));
  CHECK(pre.elements() == std::vector<Element>{1, 2, 5});  // {a,b,1}

  const FilterSet img = image_filter(h, principal_filter(g6, 2));
  CHECK(img == trivial_filter(two));
  CHECK(image_filter(h, improper_filter(g6)) == improper_filter(two));

  const Algebra g3 = fixture("godel3");
  const Morphism emb = Morphism::make(two, g3, {0, 2});
  CHECK_FALSE(emb.surjective);
  CHECK_THROWS_AS(image_filter(emb, trivial_filter(two)), std::invalid_argument);
  // Preimages transport filterhood, primeness, and maximality backwards even
  // for embeddings: {m,1} is maximal in the codomain and pulls back to {1},
  // the maximal filter of the 2-chain.
  CHECK(preimage_filter(emb, ElemSet::of(3, {1, 2})) == trivial_filter(two));
}

TEST_CASE("isomorphism search finds the identity and relabelings") {
  const Algebra A = fixture("g6");
  const auto self = find_isomorphism(A, A);
  REQUIRE(self.has_value());
  // Lexicographically least automorphism is the identity.
  CHECK(self->map == std::vector<Element>{0, 1, 2, 3, 4, 5});

  Algebra B = A;
  // Relabel by swapping the roles of indices 2 and 3 consistently.
  const std::vector<Element> p{0, 1, 3, 2, 4, 5};
  B.join_t.assign(36, 0);
  B.meet_t.assign(36, 0);
  B.prod_t.assign(36, 0);
  B.impl_t.assign(36, 0);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      B.join_t[p[a] * 6 + p[b]] = p[A.join(a, b)];
      B.meet_t[p[a] * 6 + p[b]] = p[A.meet(a, b)];
      B.prod_t[p[a] * 6 + p[b]] = p[A.prod(a, b)];
      B.impl_t[p[a] * 6 + p[b]] = p[A.impl(a, b)];
    }
  const auto iso = find_isomorphism(A, B);
  REQUIRE(iso.has_value());
  CHECK(iso->map == p);
}

TEST_CASE("isomorphism search rejects structurally different algebras") {
  CHECK_FALSE(find_isomorphism(fixture("godel3"), fixture("lukasiewicz3")).has_value());
  CHECK_FALSE(find_isomorphism(fixture("godel3"), fixture("godel4")).has_value());
  CHECK_FALSE(find_isomorphism(fixture("boolean4"), fixture("godel4")).has_value());
  CHECK(find_isomorphism(fixture("boolean4"), fixture("boolean4")).has_value());

  Algebra big = direct_product({fixture("godel3"), fixture("godel3"),
                                fixture("godel3")})
                    .algebra;
  CHECK_THROWS_AS(find_isomorphism(big, big), std::invalid_argument);
  CHECK(find_isomorphism(big, big, 32).has_value());
}
