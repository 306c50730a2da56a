#ifndef RESLAT_FILTERS_HPP
#define RESLAT_FILTERS_HPP

// Filter machinery: recognition, generation, full enumeration, the prime and
// maximal spectra, the radical, the dense filter, and the filter join.

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

// F is a filter iff 1 ∈ F, F is ⊙-closed, and F is an up-set.
inline bool is_filter(const Algebra& A, const FilterSet& F) {
  if (F.universe_size() != A.n) return false;
  if (!F.test(A.one)) return false;
  const std::vector<Element> mem = F.elements();
  for (Element a : mem)
    for (Element b : mem)
      if (!F.test(A.prod(a, b))) return false;
  for (Element a : mem)
    for (Element b = 0; b < A.n; ++b)
      if (A.leq(a, b) && !F.test(b)) return false;
  return true;
}

// Proper ⇔ 0 ∉ F (equivalently F ≠ A, since filters are up-sets).
inline bool is_proper(const Algebra& A, const FilterSet& F) {
  return !F.test(A.zero);
}

// Least filter containing X; ⟨∅⟩ = {1}. Worklist closure under products with
// current members followed by the up-set sweep.
inline FilterSet generated_filter(const Algebra& A, const std::vector<Element>& X) {
  for (Element x : X)
    detail::require(x >= 0 && x < A.n, "generated_filter: element out of range");
  FilterSet F(A.n);
  std::deque<Element> work;
  auto add = [&](Element a) {
    if (!F.test(a)) {
      F.set(a);
      work.push_back(a);
    }
  };
  add(A.one);
  for (Element x : X) add(x);
  while (!work.empty()) {
    const Element a = work.front();
    work.pop_front();
    for (Element b : F.elements()) add(A.prod(a, b));
    for (Element b = 0; b < A.n; ++b)
      if (A.leq(a, b)) add(b);
  }
  detail::ensure(is_filter(A, F), "generated_filter: closure is not a filter");
  return F;
}

inline FilterSet principal_filter(const Algebra& A, Element a) {
  return generated_filter(A, {a});
}

inline FilterSet trivial_filter(const Algebra& A) { return generated_filter(A, {}); }

inline FilterSet improper_filter(const Algebra& A) { return ElemSet::full(A.n); }

// Join in the filter lattice: the filter generated by the union.
inline FilterSet filter_join(const Algebra& A, const FilterSet& F, const FilterSet& G) {
  std::vector<Element> gen = F.elements();
  for (Element a : G.elements()) gen.push_back(a);
  return generated_filter(A, gen);
}

// All filters of A, deterministically ordered (cardinality, then ascending-
// element lex). Every filter is the join of the principal filters of its
// members, so closing the principal filters under binary join is exhaustive;
// for small algebras the 2^n subset sweep cross-checks that argument.
inline std::vector<FilterSet> all_filters(const Algebra& A) {
  std::set<FilterSet> seen;
  std::deque<FilterSet> work;
  auto add = [&](const FilterSet& F) {
    if (seen.insert(F).second) work.push_back(F);
  };
  add(trivial_filter(A));
  for (Element a = 0; a < A.n; ++a) add(principal_filter(A, a));
  std::vector<FilterSet> basis(work.begin(), work.end());
  while (!work.empty()) {
    const FilterSet F = work.front();
    work.pop_front();
    for (const FilterSet& P : basis) add(filter_join(A, F, P));
  }
  std::vector<FilterSet> out(seen.begin(), seen.end());
  if (A.n <= 12) {
    std::size_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << A.n); ++mask) {
      FilterSet S(A.n);
      for (Element a = 0; a < A.n; ++a)
        if ((mask >> a) & 1u) S.set(a);
      if (is_filter(A, S)) ++brute;
    }
    detail::ensure(brute == out.size(),
                   "all_filters: join closure disagrees with the subset sweep");
  }
  return out;
}

// Prime: proper and a∨b ∈ F implies a ∈ F or b ∈ F.
inline bool is_prime_filter(const Algebra& A, const FilterSet& F) {
  if (!is_filter(A, F) || !is_proper(A, F)) return false;
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b)
      if (F.test(A.join(a, b)) && !F.test(a) && !F.test(b)) return false;
  return true;
}

inline std::vector<FilterSet> spec(const Algebra& A) {
  std::vector<FilterSet> out;
  for (const FilterSet& F : all_filters(A))
    if (is_prime_filter(A, F)) out.push_back(F);
  return out;
}

// Maximal: proper with no proper filter strictly above. Maximal filters are
// prime, which the containment assertion records.
inline std::vector<FilterSet> max_filters(const Algebra& A) {
  const std::vector<FilterSet> all = all_filters(A);
  std::vector<FilterSet> out;
  for (const FilterSet& F : all) {
    if (!is_proper(A, F)) continue;
    bool maximal = true;
    for (const FilterSet& G : all)
      if (is_proper(A, G) && F.subset_of(G) && F != G) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(F);
  }
  for (const FilterSet& M : out)
    detail::ensure(is_prime_filter(A, M), "max_filters: maximal filter is not prime");
  return out;
}

// Unities: elements whose every power has nilpotent negation.
inline ElemSet unity_elements(const Algebra& A) {
  ElemSet U(A.n);
  for (Element a = 0; a < A.n; ++a)
    if (classify_element(A, a).unity) U.set(a);
  return U;
}

// Rad = ∩ Max; by convention the improper filter when Max is empty (trivial
// algebra). Coincides with the unity elements, which is asserted.
inline FilterSet radical(const Algebra& A) {
  FilterSet R = ElemSet::full(A.n);
  for (const FilterSet& M : max_filters(A)) R = ElemSet::intersect(R, M);
  detail::ensure(R == unity_elements(A),
                 "radical: intersection of maximal filters differs from the unity elements");
  return R;
}

// Ds(A) = {a : ¬a = 0}; a filter contained in the radical.
inline FilterSet dense_filter(const Algebra& A) {
  FilterSet D(A.n);
  for (Element a = 0; a < A.n; ++a)
    if (A.neg(a) == A.zero) D.set(a);
  detail::ensure(is_filter(A, D), "dense_filter: dense set is not a filter");
  detail::ensure(D.subset_of(radical(A)), "dense_filter: dense set exceeds the radical");
  return D;
}

// F_M = {a : only finitely many maximal filters exclude a}. Computed
// literally; with finitely many maximal filters every element qualifies, so
// the result is always the improper filter here (asserted).
inline FilterSet f_m_filter(const Algebra& A) {
  const std::vector<FilterSet> maxs = max_filters(A);
  FilterSet F(A.n);
  for (Element a = 0; a < A.n; ++a) {
    std::size_t excluded = 0;
    for (const FilterSet& M : maxs)
      if (!M.test(a)) ++excluded;
    if (excluded <= maxs.size()) F.set(a);  // any count is finite here
  }
  detail::ensure(F == improper_filter(A),
                 "f_m_filter: every element of a finite algebra belongs to F_M");
  return F;
}

// Co-maximal: the join is the improper filter.
inline bool co_maximal(const Algebra& A, const FilterSet& F, const FilterSet& G) {
  return filter_join(A, F, G) == improper_filter(A);
}

}  // namespace reslat

#endif  // RESLAT_FILTERS_HPP
