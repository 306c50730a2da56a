#ifndef RESLAT_BOOLEAN_CENTER_HPP
#define RESLAT_BOOLEAN_CENTER_HPP

// The Boolean center B(A) of complemented elements, relative algebras on
// up-sets of central elements, congruence restriction, and the lifting of
// idempotents along the projection A -> A/Rad.

#include <algorithm>
#include <optional>
#include <vector>

#include "reslat/quotient.hpp"

namespace reslat {

struct BooleanCenter {
  std::vector<Element> members;  // ascending

  bool contains(Element e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }
};

// B(A) = {e : e ∨ f = 1 and e ∧ f = 0 for some f}. The complement is unique
// and equals ¬e; further structural facts (¬¬e = e, idempotence, ⟨e⟩ being
// the up-set of e, closure under ∨ ∧ ¬, ⊙ and → collapsing to ∧ and ¬e ∨ f,
// B ∩ Rad = {1}, and the Boolean-algebra laws on B) are all asserted.
inline BooleanCenter boolean_center(const Algebra& A) {
  BooleanCenter B;
  std::vector<Element> complement(static_cast<std::size_t>(A.n), -1);
  for (Element e = 0; e < A.n; ++e) {
    int found = 0;
    for (Element f = 0; f < A.n; ++f)
      if (A.join(e, f) == A.one && A.meet(e, f) == A.zero) {
        complement[e] = f;
        ++found;
      }
    if (found > 0) {
      B.members.push_back(e);
      detail::ensure(found == 1, "boolean_center: complement is not unique");
      detail::ensure(complement[e] == A.neg(e),
                     "boolean_center: complement differs from the negation");
    }
  }
  const FilterSet rad = radical(A);
  for (Element e : B.members) {
    detail::ensure(A.neg(A.neg(e)) == e, "boolean_center: ¬¬e differs from e");
    detail::ensure(A.prod(e, e) == e, "boolean_center: central element is not idempotent");
    // ⟨e⟩ coincides with the up-set of e.
    const FilterSet gen = principal_filter(A, e);
    FilterSet up(A.n);
    for (Element a = 0; a < A.n; ++a)
      if (A.leq(e, a)) up.set(a);
    detail::ensure(gen == up, "boolean_center: ⟨e⟩ is not the up-set of e");
    detail::ensure(rad.test(e) == (e == A.one),
                   "boolean_center: B ∩ Rad must be {1}");
  }
  for (Element e : B.members)
    for (Element f : B.members) {
      detail::ensure(B.contains(A.join(e, f)) && B.contains(A.meet(e, f)) &&
                         B.contains(A.neg(e)),
                     "boolean_center: not closed under ∨, ∧, ¬");
      detail::ensure(A.prod(e, f) == A.meet(e, f),
                     "boolean_center: ⊙ must collapse to ∧ on B");
      const Element arrow = A.impl(e, f);
      detail::ensure(arrow == A.join(A.neg(e), f) && B.contains(arrow),
                     "boolean_center: → must collapse to ¬e ∨ f on B");
      // Distributivity makes B a Boolean algebra, not merely complemented.
      for (Element g : B.members)
        detail::ensure(A.meet(e, A.join(f, g)) == A.join(A.meet(e, f), A.meet(e, g)),
                       "boolean_center: B is not distributive");
    }
  return B;
}

struct RelativeAlgebra {
  Algebra algebra;                 // carrier re-indexed from 0
  Element e = 0;                   // bottom in the parent
  std::vector<Element> carrier;    // relative index -> parent element (ascending)
  std::vector<Element> to_relative;  // parent element -> relative index or -1
};

// The up-set ⟨e⟩ of a central element as an algebra in its own right:
// ∨, ∧, ⊙ restrict, the residuum becomes e ∨ (a→b), bottom is e.
inline RelativeAlgebra relative_algebra(const Algebra& A, Element e) {
  detail::require(e >= 0 && e < A.n, "relative_algebra: element out of range");
  detail::require(boolean_center(A).contains(e),
                  "relative_algebra: element is not in the Boolean center");
  RelativeAlgebra res;
  res.e = e;
  res.to_relative.assign(static_cast<std::size_t>(A.n), -1);
  for (Element a = 0; a < A.n; ++a)
    if (A.leq(e, a)) {
      res.to_relative[a] = static_cast<Element>(res.carrier.size());
      res.carrier.push_back(a);
    }
  const int m = static_cast<int>(res.carrier.size());
  Algebra& R = res.algebra;
  R.name = A.name + "[" + A.label(e) + "]";
  R.n = m;
  R.zero = res.to_relative[e];
  R.one = res.to_relative[A.one];
  R.labels.reserve(m);
  for (Element a : res.carrier) R.labels.push_back(A.label(a));
  R.join_t.resize(static_cast<std::size_t>(m) * m);
  R.meet_t.resize(static_cast<std::size_t>(m) * m);
  R.prod_t.resize(static_cast<std::size_t>(m) * m);
  R.impl_t.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Element a = res.carrier[i], b = res.carrier[j];
      R.join_t[i * m + j] = res.to_relative[A.join(a, b)];
      R.meet_t[i * m + j] = res.to_relative[A.meet(a, b)];
      // ⊙ stays inside the up-set because e is central: e ≤ a, e ≤ b gives
      // e = e⊙e ≤ a⊙b.
      R.prod_t[i * m + j] = res.to_relative[A.prod(a, b)];
      R.impl_t[i * m + j] = res.to_relative[A.join(e, A.impl(a, b))];
    }
  detail::ensure(verify_axioms(R).ok(), "relative_algebra: result failed the axiom sweep");
  return res;
}

// F ∩ ⟨e⟩, a filter of the relative algebra; it is asserted to coincide with
// {e ∨ f : f ∈ F}.
inline FilterSet restrict_filter(const Algebra& A, const RelativeAlgebra& rel,
                                 const FilterSet& F) {
  detail::require(is_filter(A, F), "restrict_filter: not a filter");
  FilterSet out(rel.algebra.n);
  for (Element a : F.elements())
    if (rel.to_relative[a] >= 0) out.set(rel.to_relative[a]);
  FilterSet joined(rel.algebra.n);
  for (Element f : F.elements()) joined.set(rel.to_relative[A.join(rel.e, f)]);
  detail::ensure(out == joined, "restrict_filter: F ∩ ⟨e⟩ differs from {e ∨ f}");
  detail::ensure(is_filter(rel.algebra, out),
                 "restrict_filter: restriction is not a filter of ⟨e⟩");
  return out;
}

// Does a ≡ b (mod F) imply a ∨ e ≡ b ∨ e (mod F ∩ ⟨e⟩) for every a, b?
// Computed honestly; callers see the truth value, not an assertion.
inline bool congruence_restriction_check(const Algebra& A, const FilterSet& F, Element e) {
  detail::require(is_filter(A, F), "congruence_restriction_check: not a filter");
  const RelativeAlgebra rel = relative_algebra(A, e);
  const FilterSet Fe = restrict_filter(A, rel, F);
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b) {
      if (!F.test(A.biimpl(a, b))) continue;
      const Element ra = rel.to_relative[A.join(a, e)];
      const Element rb = rel.to_relative[A.join(b, e)];
      if (!Fe.test(rel.algebra.biimpl(ra, rb))) return false;
    }
  return true;
}

struct LiftingReport {
  bool lifts = false;
  QuotientResult mod_radical;
  BooleanCenter center;           // B(A)
  BooleanCenter quotient_center;  // B(A/Rad)
  // e ∈ B(A) paired with its image in B(A/Rad).
  std::vector<std::pair<Element, Element>> lifted;
  std::vector<Element> unliftable;  // members of B(A/Rad) missed by the map
  std::string witness;              // label of the least unliftable one
};

// Idempotents lift iff the restriction B(A) -> B(A/Rad) of the projection is
// surjective. Its image landing in B(A/Rad) and its injectivity (B meets the
// radical only in 1) are theorems, hence asserted.
inline LiftingReport has_lifting(const Algebra& A) {
  LiftingReport rep;
  rep.mod_radical = quotient(A, radical(A), "Rad");
  rep.center = boolean_center(A);
  rep.quotient_center = boolean_center(rep.mod_radical.algebra);
  std::vector<char> hit(static_cast<std::size_t>(rep.mod_radical.algebra.n), 0);
  std::vector<Element> images;
  for (Element e : rep.center.members) {
    const Element img = rep.mod_radical.class_of[e];
    detail::ensure(rep.quotient_center.contains(img),
                   "has_lifting: image of a central element is not central");
    rep.lifted.emplace_back(e, img);
    hit[img] = 1;
    images.push_back(img);
  }
  std::sort(images.begin(), images.end());
  detail::ensure(std::adjacent_find(images.begin(), images.end()) == images.end(),
                 "has_lifting: B(A) -> B(A/Rad) is not injective");
  for (Element f : rep.quotient_center.members)
    if (!hit[f]) rep.unliftable.push_back(f);
  rep.lifts = rep.unliftable.empty();
  if (!rep.lifts) rep.witness = rep.mod_radical.algebra.label(rep.unliftable.front());
  return rep;
}

// Least e ∈ B(A) projecting to the given member of B(A/Rad), or nullopt when
// the idempotent does not lift.
inline std::optional<Element> lift_idempotent(const Algebra& A, Element f) {
  const LiftingReport rep = has_lifting(A);
  detail::require(f >= 0 && f < rep.mod_radical.algebra.n,
                  "lift_idempotent: element out of range in A/Rad");
  detail::require(rep.quotient_center.contains(f),
                  "lift_idempotent: element is not central in A/Rad");
  for (const auto& [e, img] : rep.lifted)
    if (img == f) return e;  // lifted pairs are ascending in e
  return std::nullopt;
}

struct BooleanMap {
  BooleanCenter domain;    // B(source)
  BooleanCenter codomain;  // B(target)
  std::vector<Element> map;  // index into domain.members -> target element
  bool injective = false;
  bool surjective = false;
};

// Restriction of a morphism to the Boolean centers. Central elements map to
// central elements (asserted); injectivity and surjectivity are those of the
// restriction, independent of the ambient map.
inline BooleanMap boolean_restriction(const Morphism& h) {
  BooleanMap out;
  out.domain = boolean_center(h.source);
  out.codomain = boolean_center(h.target);
  for (Element e : out.domain.members) {
    const Element img = h.map[e];
    detail::ensure(out.codomain.contains(img),
                   "boolean_restriction: image of a central element is not central");
    out.map.push_back(img);
  }
  std::vector<Element> sorted = out.map;
  std::sort(sorted.begin(), sorted.end());
  out.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.surjective = sorted == out.codomain.members;
  return out;
}

}  // namespace reslat

#endif  // RESLAT_BOOLEAN_CENTER_HPP
