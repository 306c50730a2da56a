#ifndef RESLAT_QUOTIENT_HPP
#define RESLAT_QUOTIENT_HPP

// Quotients A/F by the congruence a ≡ b ⇔ a↔b ∈ F, the filter correspondence,
// canonical surjections, the second isomorphism check, and the functor that a
// morphism induces on quotients by dense filters.

#include <algorithm>
#include <set>
#include <vector>

#include "reslat/morphism.hpp"

namespace reslat {

struct QuotientResult {
  Algebra algebra;
  FilterSet filter;                       // the F that was quotiented out
  std::vector<Element> class_of;          // parent element -> class index
  std::vector<std::vector<Element>> classes;  // class index -> parent elements

  // Class of a parent element.
  Element project(Element a) const { return class_of[a]; }
};

// A/F. Classes are represented by their least parent element and ordered by
// that representative; labels read "<rep>/<tag>". The congruence laws, the
// compatibility of all four operations, and the facts tying classes of
// 1, 0 and the order back to membership in F are all asserted, as is the
// axiom sweep on the result.
inline QuotientResult quotient(const Algebra& A, const FilterSet& F,
                               const std::string& tag = "F") {
  detail::require(F.universe_size() == A.n, "quotient: filter lives in the wrong algebra");
  detail::require(is_filter(A, F), "quotient: not a filter");

  QuotientResult res;
  res.filter = F;
  res.class_of.assign(static_cast<std::size_t>(A.n), -1);
  auto same = [&](Element a, Element b) { return F.test(A.biimpl(a, b)); };
  for (Element a = 0; a < A.n; ++a) {
    if (res.class_of[a] >= 0) continue;
    const Element id = static_cast<Element>(res.classes.size());
    res.classes.push_back({});
    for (Element b = a; b < A.n; ++b)
      if (res.class_of[b] < 0 && same(a, b)) {
        res.class_of[b] = id;
        res.classes[id].push_back(b);
      }
  }
  // ≡ must be transitive for the sweep above to produce a partition; verify
  // it really is one (every element classed, classes pairwise disjoint by
  // construction, and relation respects the partition).
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b)
      detail::ensure(same(a, b) == (res.class_of[a] == res.class_of[b]),
                     "quotient: a↔b ∈ F is not a congruence partition");

  const int m = static_cast<int>(res.classes.size());
  Algebra& Q = res.algebra;
  Q.name = A.name + "/" + tag;
  Q.n = m;
  Q.zero = res.class_of[A.zero];
  Q.one = res.class_of[A.one];
  Q.labels.reserve(m);
  for (const auto& cls : res.classes) Q.labels.push_back(A.label(cls[0]) + "/" + tag);
  Q.join_t.assign(static_cast<std::size_t>(m) * m, 0);
  Q.meet_t.assign(static_cast<std::size_t>(m) * m, 0);
  Q.prod_t.assign(static_cast<std::size_t>(m) * m, 0);
  Q.impl_t.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Element a = res.classes[i][0], b = res.classes[j][0];
      Q.join_t[i * m + j] = res.class_of[A.join(a, b)];
      Q.meet_t[i * m + j] = res.class_of[A.meet(a, b)];
      Q.prod_t[i * m + j] = res.class_of[A.prod(a, b)];
      Q.impl_t[i * m + j] = res.class_of[A.impl(a, b)];
    }
  // The tables above were filled from representatives; every pair of parent
  // elements must agree with them, i.e. ≡ is compatible with all four
  // operations.
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b) {
      const int i = res.class_of[a], j = res.class_of[b];
      detail::ensure(Q.join_t[i * m + j] == res.class_of[A.join(a, b)] &&
                         Q.meet_t[i * m + j] == res.class_of[A.meet(a, b)] &&
                         Q.prod_t[i * m + j] == res.class_of[A.prod(a, b)] &&
                         Q.impl_t[i * m + j] == res.class_of[A.impl(a, b)],
                     "quotient: operations are not compatible with the congruence");
    }
  for (Element a = 0; a < A.n; ++a) {
    detail::ensure((res.class_of[a] == Q.one) == F.test(a),
                   "quotient: class of 1 must be exactly F");
    detail::ensure((res.class_of[a] == Q.zero) == F.test(A.neg(a)),
                   "quotient: class of 0 must be exactly {a : ¬a ∈ F}");
  }
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b)
      detail::ensure(Q.leq(res.class_of[a], res.class_of[b]) == F.test(A.impl(a, b)),
                     "quotient: order on classes must be a→b ∈ F");
  detail::ensure(verify_axioms(Q).ok(), "quotient: result failed the axiom sweep");
  return res;
}

// Order between the classes of two parent elements.
inline bool quotient_order(const Algebra& A, const FilterSet& F, Element a, Element b) {
  detail::require(a >= 0 && a < A.n && b >= 0 && b < A.n,
                  "quotient_order: element out of range");
  detail::require(is_filter(A, F), "quotient_order: not a filter");
  return F.test(A.impl(a, b));
}

// Canonical surjection A -> A/F built from an existing quotient.
inline Morphism projection_morphism(const Algebra& A, const QuotientResult& q) {
  Morphism h = Morphism::make(A, q.algebra, q.class_of);
  detail::ensure(h.surjective, "projection_morphism: projection is not surjective");
  return h;
}

struct FilterCorrespondence {
  QuotientResult quot;
  // (filter of A containing F, its image in A/F); the improper pair included.
  std::vector<std::pair<FilterSet, FilterSet>> pairs;
};

// The lattice of filters above F corresponds bijectively and order-compatibly
// with the lattice of all filters of A/F, maximal filters matching maximal
// filters. All of that is asserted, not assumed.
inline FilterCorrespondence filter_correspondence(const Algebra& A, const FilterSet& F) {
  FilterCorrespondence out;
  out.quot = quotient(A, F);
  const Algebra& Q = out.quot.algebra;

  std::vector<FilterSet> above;
  for (const FilterSet& G : all_filters(A))
    if (F.subset_of(G)) above.push_back(G);
  for (const FilterSet& G : above) {
    FilterSet img(Q.n);
    for (Element a = 0; a < A.n; ++a)
      if (G.test(a)) img.set(out.quot.class_of[a]);
    detail::ensure(is_filter(Q, img), "filter_correspondence: image is not a filter");
    // G must be recovered as the full preimage of its image.
    FilterSet pre(A.n);
    for (Element a = 0; a < A.n; ++a)
      if (img.test(out.quot.class_of[a])) pre.set(a);
    detail::ensure(pre == G, "filter_correspondence: filter is not saturated over its image");
    out.pairs.emplace_back(G, img);
  }
  // Bijectivity: distinct images, and every filter of Q is hit.
  std::set<FilterSet> images;
  for (const auto& pr : out.pairs)
    detail::ensure(images.insert(pr.second).second,
                   "filter_correspondence: two filters share an image");
  detail::ensure(images.size() == all_filters(Q).size(),
                 "filter_correspondence: images do not exhaust the quotient's filters");
  // Inclusion both ways.
  for (const auto& p1 : out.pairs)
    for (const auto& p2 : out.pairs)
      detail::ensure(p1.first.subset_of(p2.first) == p1.second.subset_of(p2.second),
                     "filter_correspondence: correspondence is not an order isomorphism");
  // Maximal ↔ maximal.
  const auto maxA = max_filters(A);
  const auto maxQ = max_filters(Q);
  for (const auto& pr : out.pairs) {
    const bool am = std::find(maxA.begin(), maxA.end(), pr.first) != maxA.end();
    const bool qm = std::find(maxQ.begin(), maxQ.end(), pr.second) != maxQ.end();
    detail::ensure(am == qm, "filter_correspondence: maximality not preserved");
  }
  return out;
}

// A/F -> A/G for F ⊆ G, sending a/F to a/G. Surjective always; injective
// exactly when F = G, which is asserted.
inline Morphism canonical_surjection(const Algebra& A, const FilterSet& F,
                                     const FilterSet& G) {
  detail::require(is_filter(A, F) && is_filter(A, G), "canonical_surjection: not a filter");
  detail::require(F.subset_of(G), "canonical_surjection: filters not nested");
  const QuotientResult qf = quotient(A, F);
  const QuotientResult qg = quotient(A, G);
  std::vector<Element> map(static_cast<std::size_t>(qf.algebra.n), -1);
  for (Element a = 0; a < A.n; ++a) {
    Element& slot = map[qf.class_of[a]];
    detail::ensure(slot < 0 || slot == qg.class_of[a],
                   "canonical_surjection: map is not well defined");
    slot = qg.class_of[a];
  }
  Morphism h = Morphism::make(qf.algebra, qg.algebra, std::move(map));
  detail::ensure(h.surjective, "canonical_surjection: not surjective");
  detail::ensure(h.injective == (F == G),
                 "canonical_surjection: injective exactly when the filters coincide");
  return h;
}

struct SecondIsomorphism {
  bool holds = false;
  Morphism iso;  // (A/F)/(G/F) -> A/G
};

// (A/F)/(G/F) ≅ A/G for F ⊆ G, via the natural map on classes.
inline SecondIsomorphism second_isomorphism_check(const Algebra& A, const FilterSet& F,
                                                  const FilterSet& G) {
  detail::require(is_filter(A, F) && is_filter(A, G),
                  "second_isomorphism_check: not a filter");
  detail::require(F.subset_of(G), "second_isomorphism_check: filters not nested");
  const QuotientResult qf = quotient(A, F);
  // G/F as a filter of A/F.
  FilterSet gf(qf.algebra.n);
  for (Element a = 0; a < A.n; ++a)
    if (G.test(a)) gf.set(qf.class_of[a]);
  detail::ensure(is_filter(qf.algebra, gf),
                 "second_isomorphism_check: G/F is not a filter of A/F");
  const QuotientResult qq = quotient(qf.algebra, gf, "G");
  const QuotientResult qg = quotient(A, G, "G");
  std::vector<Element> map(static_cast<std::size_t>(qq.algebra.n), -1);
  for (Element a = 0; a < A.n; ++a) {
    Element& slot = map[qq.class_of[qf.class_of[a]]];
    detail::ensure(slot < 0 || slot == qg.class_of[a],
                   "second_isomorphism_check: natural map is not well defined");
    slot = qg.class_of[a];
  }
  SecondIsomorphism out;
  out.iso = Morphism::make(qq.algebra, qg.algebra, std::move(map));
  out.holds = out.iso.injective && out.iso.surjective;
  detail::ensure(out.holds, "second_isomorphism_check: natural map is not bijective");
  return out;
}

// A morphism h: A -> B descends to A/Ds(A) -> B/Ds(B); the descended map is
// asserted to be a morphism commuting with the projections, and to inherit
// surjectivity from h.
inline Morphism dense_functor_map(const Morphism& h) {
  const QuotientResult qa = quotient(h.source, dense_filter(h.source), "Ds");
  const QuotientResult qb = quotient(h.target, dense_filter(h.target), "Ds");
  std::vector<Element> map(static_cast<std::size_t>(qa.algebra.n), -1);
  for (Element a = 0; a < h.source.n; ++a) {
    Element& slot = map[qa.class_of[a]];
    detail::ensure(slot < 0 || slot == qb.class_of[h.map[a]],
                   "dense_functor_map: descended map is not well defined");
    slot = qb.class_of[h.map[a]];
  }
  Morphism down = Morphism::make(qa.algebra, qb.algebra, std::move(map));
  for (Element a = 0; a < h.source.n; ++a)
    detail::ensure(down.map[qa.class_of[a]] == qb.class_of[h.map[a]],
                   "dense_functor_map: square does not commute");
  if (h.surjective)
    detail::ensure(down.surjective, "dense_functor_map: surjectivity not inherited");
  return down;
}

}  // namespace reslat

#endif  // RESLAT_QUOTIENT_HPP
