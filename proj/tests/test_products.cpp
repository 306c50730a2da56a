#include <catch_amalgamated.hpp>

#include <algorithm>

#include "reslat/fixtures.hpp"
#include "reslat/products.hpp"

using namespace reslat;

namespace {

std::vector<std::string> labels_of(const Algebra& A, const FilterSet& F) {
  std::vector<std::string> out;
  for (Element a : F.elements()) out.push_back(A.label(a));
  return out;
}

FilterSet from_labels(const Algebra& A, const std::vector<std::string>& labels) {
  FilterSet F(A.n);
  for (const std::string& l : labels) {
    const auto it = std::find(A.labels.begin(), A.labels.end(), l);
    REQUIRE(it != A.labels.end());
    F.set(static_cast<Element>(it - A.labels.begin()));
  }
  return F;
}

}  // namespace

TEST_CASE("direct product layout and certificates") {
  const ProductAlgebra P = direct_product({fixture("g6"), fixture("chain2")});
  const Algebra& A = P.algebra;
  CHECK(A.n == 12);
  CHECK(A.name == "g6xchain2");
  CHECK(A.zero == 0);
  CHECK(A.one == 11);
  CHECK(A.label(3) == "(a,1)");
  CHECK(P.strides == std::vector<int>{2, 1});
  for (Element x = 0; x < A.n; ++x) CHECK(P.encode(P.coords(x)) == x);
  CHECK(delta_elements(P) == std::vector<Element>{1, 10});
  REQUIRE(P.projections.size() == 2);
  CHECK(P.projections[0].surjective);
  CHECK(P.projections[1].map[3] == 1);
  CHECK(verify_axioms(A).ok());

  // A three-fold product is past the full-sweep threshold only at 512; this
  // one still verifies outright.
  const ProductAlgebra big = direct_product({fixture("g6"), fixture("g6"), fixture("g6")});
  CHECK(big.algebra.n == 216);
  CHECK(big.deltas.size() == 3);

  CHECK_THROWS_WITH(direct_product({fixture("g6"), fixture("g6"), fixture("g6")}, 100),
                    "direct_product: product size exceeds cap 100");
  CHECK_THROWS_AS(direct_product({}, 10), std::invalid_argument);
}

TEST_CASE("filters of a product over a prime filter of a factor") {
  const ProductAlgebra P = direct_product({fixture("g6"), fixture("chain2")});
  const Algebra g6 = fixture("g6");
  const FilterSet Q = from_labels(g6, {"a", "b", "1"});
  const FilterSet F = over_filter(P, 0, Q);
  CHECK(labels_of(P.algebra, F) ==
        std::vector<std::string>{"(a,0)", "(a,1)", "(b,0)", "(b,1)", "(1,0)", "(1,1)"});
  CHECK_THROWS_AS(over_filter(P, 2, Q), std::invalid_argument);
  // {a,1} is a filter of g6 but not prime, so it is rejected.
  CHECK_THROWS_AS(over_filter(P, 0, from_labels(g6, {"a", "1"})), std::invalid_argument);
}

TEST_CASE("spectrum of a product is additive") {
  const ProductAlgebra P = direct_product({fixture("g6"), fixture("chain2")});
  const ProductSpectrumReport rep = spec_max_of_product(P);
  CHECK(rep.factor_spec_counts == std::vector<std::size_t>{3, 1});
  CHECK(rep.factor_max_counts == std::vector<std::size_t>{2, 1});
  CHECK(rep.spec_direct.size() == 4);
  CHECK(rep.max_direct.size() == 3);

  const ProductAlgebra Q = direct_product({fixture("godel3"), fixture("godel3")});
  const ProductSpectrumReport qrep = spec_max_of_product(Q);
  CHECK(qrep.max_direct.size() == 2);
  CHECK(qrep.spec_direct.size() == 4);
  CHECK(boolean_center(Q.algebra).members.size() == 4);
}

TEST_CASE("simultaneous congruences against co-maximal filters") {
  const Algebra g6 = fixture("g6");
  const FilterSet M1 = from_labels(g6, {"a", "b", "1"});
  const FilterSet M2 = from_labels(g6, {"a", "c", "d", "1"});

  SECTION("the six-element example") {
    const CrtResult res = crt_solve(g6, {M1, M2}, {0, g6.one});
    CHECK(g6.label(res.solution) == "c");
    CHECK(labels_of(g6, FilterSet::of(g6.n, res.all)) ==
          std::vector<std::string>{"c", "d"});
  }
  SECTION("filters that are not co-maximal are refused before any search") {
    CHECK_THROWS_WITH(crt_solve(g6, {trivial_filter(g6), M1}, {0, 0}),
                      "crt_solve: filters 1 and 2 are not co-maximal");
  }
  SECTION("a single congruence pins the congruence class") {
    const CrtResult res = crt_solve(g6, {trivial_filter(g6)}, {2});
    CHECK(res.solution == 2);
    CHECK(res.all == std::vector<Element>{2});
  }
  SECTION("two-by-two Boolean example") {
    const Algebra b4 = fixture("boolean4");
    const auto maxs = max_filters(b4);
    REQUIRE(maxs.size() == 2);
    const CrtResult res = crt_solve(b4, {maxs[0], maxs[1]}, {0, b4.one});
    CHECK(b4.label(res.solution) == "(1,0)");
    CHECK(res.all == std::vector<Element>{2});
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(crt_solve(g6, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(crt_solve(g6, {M1}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(crt_solve(g6, {M1}, {7}), std::invalid_argument);
  }
}

TEST_CASE("classification flags") {
  SECTION("six-element example") {
    const Classification c = classify(fixture("g6"));
    CHECK_FALSE(c.local);
    CHECK(c.semilocal);
    CHECK(c.maximal);
    CHECK(c.radical_dense);
    CHECK_FALSE(c.has_lifting);
    CHECK(c.lifting_witness == "b/Rad");
    CHECK(c.filter_count == 5);
    CHECK(c.spec_count == 3);
    CHECK(c.max_count == 2);
    REQUIRE(c.notes.size() == 1);
    CHECK(c.notes[0].find("paper-note: radical_dense holds yet has_lifting fails") !=
          std::string::npos);
    CHECK(c.notes[0].find("b/Rad") != std::string::npos);
  }
  SECTION("two-element chain") {
    const Classification c = classify(fixture("chain2"));
    CHECK(c.local);
    CHECK(c.perfect);
    CHECK_FALSE(c.perfect_literal);
    CHECK(c.radical_dense);
    CHECK(c.has_lifting);
    REQUIRE(c.notes.size() == 1);
    CHECK(c.notes[0].find("paper-note: literal perfectness") != std::string::npos);
  }
  SECTION("three-element Lukasiewicz chain") {
    const Classification c = classify(fixture("lukasiewicz3"));
    CHECK(c.local);
    CHECK_FALSE(c.perfect);        // fails at the midpoint, whose negation is itself
    CHECK_FALSE(c.perfect_literal);
    CHECK(c.notes.empty());
  }
  SECTION("three-element Godel chain") {
    const Classification c = classify(fixture("godel3"));
    CHECK(c.local);
    CHECK(c.perfect);
    CHECK_FALSE(c.perfect_literal);
    REQUIRE(c.notes.size() == 1);
  }
  SECTION("products of chains keep a dense radical") {
    const Classification c =
        classify(direct_product({fixture("godel3"), fixture("godel3")}).algebra);
    CHECK_FALSE(c.local);
    CHECK(c.radical_dense);  // Rad and Ds are both {m,1} x {m,1}
    CHECK(c.has_lifting);
    CHECK(c.max_count == 2);
    CHECK(c.notes.empty());
  }
  SECTION("a chain whose unity is not dense separates Rad from Ds") {
    // 0 < t < u < 1 with t.t = t.u = 0 and u.u = u: the unity u has the
    // nilpotent negation t, so Rad = {u,1} while Ds = {1}.
    Algebra A;
    A.name = "uchain4";
    A.n = 4;
    A.labels = {"0", "t", "u", "1"};
    A.zero = 0;
    A.one = 3;
    A.join_t.resize(16);
    A.meet_t.resize(16);
    for (Element a = 0; a < 4; ++a)
      for (Element b = 0; b < 4; ++b) {
        A.join_t[a * 4 + b] = std::max(a, b);
        A.meet_t[a * 4 + b] = std::min(a, b);
      }
    A.prod_t = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
    A.impl_t = {3, 3, 3, 3, 2, 3, 3, 3, 1, 1, 3, 3, 0, 1, 2, 3};
    REQUIRE(verify_axioms(A).ok());
    CHECK(labels_of(A, radical(A)) == std::vector<std::string>{"u", "1"});
    CHECK(labels_of(A, dense_filter(A)) == std::vector<std::string>{"1"});
    const Classification c = classify(A);
    CHECK(c.local);
    CHECK_FALSE(c.radical_dense);
    CHECK(c.perfect);
    CHECK(c.has_lifting);
  }
}

TEST_CASE("semilocal decomposition of every fixture") {
  for (const std::string& name : fixture_names()) {
    INFO(name);
    const Algebra A = fixture(name);
    const SemilocalDecomposition d = semilocal_decompose(A);
    CHECK(d.iso.injective);
    CHECK(d.iso.surjective);
    CHECK(d.product.algebra.n == d.mod_radical.algebra.n);
    CHECK(d.simple_quotients.size() == max_filters(A).size());
  }
  const SemilocalDecomposition d = semilocal_decompose(fixture("g6"));
  CHECK(d.mod_radical.algebra.n == 4);
  REQUIRE(d.simple_quotients.size() == 2);
  CHECK(d.simple_quotients[0].algebra.n == 2);
  CHECK(d.simple_quotients[1].algebra.n == 2);
  CHECK(d.simple_quotients[0].algebra.label(1).find("/M1") != std::string::npos);
  CHECK(d.product.algebra.n == 4);
}

TEST_CASE("decomposition into local factors") {
  SECTION("refused when idempotents do not lift") {
    CHECK_THROWS_MATCHES(
        decompose(fixture("g6")), no_lifting_error,
        Catch::Matchers::Message("no lifting; unliftable idempotent b/Rad"));
  }
  SECTION("refused on the trivial algebra") {
    const Algebra trivial = quotient(fixture("chain2"), improper_filter(fixture("chain2"))).algebra;
    CHECK_THROWS_AS(decompose(trivial), std::invalid_argument);
  }
  SECTION("product of two Godel chains splits back into two local factors") {
    const Algebra A = direct_product({fixture("godel3"), fixture("godel3")}).algebra;
    const DecompositionReport rep = decompose(A);
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.idempotents.size() == 2);
    CHECK(rep.iso.injective);
    CHECK(rep.iso.surjective);
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
      CHECK(rep.factor_local[i]);
      CHECK(rep.factor_nontrivial[i]);
      CHECK(find_isomorphism(rep.factors[i].algebra, fixture("godel3")).has_value());
    }
  }
  SECTION("a local algebra is its own single factor") {
    const DecompositionReport rep = decompose(fixture("godel3"));
    REQUIRE(rep.factors.size() == 1);
    CHECK(rep.idempotents == std::vector<Element>{0});
    CHECK(rep.factors[0].algebra.n == 3);
    CHECK(find_isomorphism(rep.factors[0].algebra, fixture("godel3")).has_value());
  }
  SECTION("mixed product recovers factor sizes") {
    const Algebra A = direct_product({fixture("chain2"), fixture("lukasiewicz3")}).algebra;
    const DecompositionReport rep = decompose(A);
    REQUIRE(rep.factors.size() == 2);
    std::vector<int> sizes{rep.factors[0].algebra.n, rep.factors[1].algebra.n};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3});
    CHECK(rep.classification.max_count == 2);
  }
}
