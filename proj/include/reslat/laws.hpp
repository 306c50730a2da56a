#ifndef RESLAT_LAWS_HPP
#define RESLAT_LAWS_HPP

// Exhaustive property suites: the thirteen arithmetic identities every
// residuated lattice satisfies, and the five identities governing central
// elements. Each law reports its case count and the first failing witness.

#include <functional>
#include <string>
#include <vector>

#include "reslat/boolean_center.hpp"

namespace reslat {

struct LawResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<Element> witness;  // first failing tuple, empty when clean
};

namespace detail {

template <typename Pred>
LawResult sweep_law(const Algebra& A, std::string name, int arity,
                    const std::vector<std::vector<Element>>& domains, Pred pred) {
  LawResult r;
  r.name = std::move(name);
  std::vector<Element> tuple(static_cast<std::size_t>(arity), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == arity) {
      ++r.cases;
      if (!pred(tuple)) {
        ++r.failures;
        if (r.witness.empty()) r.witness = tuple;
      }
      return;
    }
    for (Element v : domains[pos]) {
      tuple[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return r;
}

inline std::vector<Element> every_element(const Algebra& A) {
  std::vector<Element> xs(static_cast<std::size_t>(A.n));
  for (Element a = 0; a < A.n; ++a) xs[a] = a;
  return xs;
}

}  // namespace detail

// The thirteen identities, swept over all tuples.
inline std::vector<LawResult> core_law_suite(const Algebra& A) {
  const std::vector<Element> all = detail::every_element(A);
  const std::vector<std::vector<Element>> d1{all}, d2{all, all}, d3{all, all, all},
      d4{all, all, all, all};
  std::vector<LawResult> out;
  out.push_back(detail::sweep_law(A, "neg-constants", 0, {}, [&](const auto&) {
    return A.neg(A.zero) == A.one && A.neg(A.one) == A.zero;
  }));
  out.push_back(detail::sweep_law(A, "impl-unit", 1, d1, [&](const auto& t) {
    return A.impl(A.one, t[0]) == t[0] && A.impl(t[0], A.one) == A.one;
  }));
  out.push_back(detail::sweep_law(A, "order-residuation", 2, d2, [&](const auto& t) {
    return (A.leq(t[0], t[1]) == (A.impl(t[0], t[1]) == A.one)) &&
           (A.leq(t[0], A.neg(t[1])) == (A.prod(t[0], t[1]) == A.zero));
  }));
  out.push_back(detail::sweep_law(A, "prod-monotone", 4, d4, [&](const auto& t) {
    if (!A.leq(t[0], t[1]) || !A.leq(t[2], t[3])) return true;
    return A.leq(A.prod(t[0], t[2]), A.prod(t[1], t[3]));
  }));
  out.push_back(detail::sweep_law(A, "impl-monotone", 3, d3, [&](const auto& t) {
    if (!A.leq(t[0], t[1])) return true;
    return A.leq(A.impl(t[2], t[0]), A.impl(t[2], t[1])) &&
           A.leq(A.impl(t[1], t[2]), A.impl(t[0], t[2]));
  }));
  out.push_back(detail::sweep_law(A, "prod-below-meet", 2, d2, [&](const auto& t) {
    return A.leq(A.prod(t[0], t[1]), A.meet(t[0], t[1]));
  }));
  out.push_back(detail::sweep_law(A, "weakening", 2, d2, [&](const auto& t) {
    return A.leq(t[0], A.impl(t[1], t[0]));
  }));
  out.push_back(detail::sweep_law(A, "zero-laws", 1, d1, [&](const auto& t) {
    return A.prod(t[0], A.zero) == A.zero && A.impl(A.zero, t[0]) == A.one &&
           A.biimpl(t[0], A.zero) == A.neg(t[0]);
  }));
  out.push_back(detail::sweep_law(A, "double-negation", 1, d1, [&](const auto& t) {
    return A.leq(t[0], A.neg(A.neg(t[0]))) &&
           A.neg(A.neg(A.neg(t[0]))) == A.neg(t[0]);
  }));
  out.push_back(detail::sweep_law(A, "prod-join-distrib", 3, d3, [&](const auto& t) {
    return A.prod(t[0], A.join(t[1], t[2])) ==
           A.join(A.prod(t[0], t[1]), A.prod(t[0], t[2]));
  }));
  out.push_back(detail::sweep_law(A, "join-impl-meet", 3, d3, [&](const auto& t) {
    return A.impl(A.join(t[0], t[1]), t[2]) ==
           A.meet(A.impl(t[0], t[2]), A.impl(t[1], t[2]));
  }));
  out.push_back(detail::sweep_law(A, "impl-compose", 3, d3, [&](const auto& t) {
    return A.leq(A.impl(t[0], t[1]),
                 A.impl(A.impl(t[2], t[0]), A.impl(t[2], t[1])));
  }));
  out.push_back(detail::sweep_law(A, "impl-exchange", 3, d3, [&](const auto& t) {
    return A.impl(t[0], A.impl(t[1], t[2])) == A.impl(t[1], A.impl(t[0], t[2]));
  }));
  return out;
}

// The five identities for central elements e, f against arbitrary a, b.
inline std::vector<LawResult> boolean_law_suite(const Algebra& A) {
  const std::vector<Element> all = detail::every_element(A);
  const std::vector<Element> central = boolean_center(A).members;
  std::vector<LawResult> out;
  out.push_back(detail::sweep_law(A, "center-below-discard", 2, {central, all},
                                  [&](const auto& t) {
                                    if (!A.leq(t[0], t[1])) return true;
                                    return A.impl(A.neg(t[0]), t[1]) == t[1];
                                  }));
  out.push_back(detail::sweep_law(A, "center-impl-absorb", 2, {central, all},
                                  [&](const auto& t) {
                                    return A.impl(t[0], t[1]) ==
                                           A.impl(t[0], A.impl(t[0], t[1]));
                                  }));
  out.push_back(detail::sweep_law(A, "center-impl-distrib", 3, {central, all, all},
                                  [&](const auto& t) {
                                    return A.impl(t[0], A.impl(t[1], t[2])) ==
                                           A.impl(A.impl(t[0], t[1]),
                                                  A.impl(t[0], t[2]));
                                  }));
  out.push_back(detail::sweep_law(A, "center-neg-impl-join", 2, {central, all},
                                  [&](const auto& t) {
                                    return A.impl(A.neg(t[0]), t[1]) ==
                                           A.join(t[0], t[1]);
                                  }));
  out.push_back(detail::sweep_law(A, "center-meet-join-distrib", 3,
                                  {central, central, all}, [&](const auto& t) {
                                    return A.join(t[2], A.meet(t[0], t[1])) ==
                                           A.meet(A.join(t[2], t[0]),
                                                  A.join(t[2], t[1]));
                                  }));
  return out;
}

inline bool all_pass(const std::vector<LawResult>& results) {
  for (const LawResult& r : results)
    if (r.failures > 0) return false;
  return true;
}

}  // namespace reslat

#endif  // RESLAT_LAWS_HPP
