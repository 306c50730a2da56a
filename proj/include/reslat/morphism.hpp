#ifndef RESLAT_MORPHISM_HPP
#define RESLAT_MORPHISM_HPP

// Homomorphisms between algebras: validation, kernels, filter transport along
// and against a map, and bounded isomorphism search.

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "reslat/filters.hpp"

namespace reslat {

struct MorphismViolation {
  std::string op;  // "zero", "one", "join", "meet", "prod", "impl"
  Element a = -1, b = -1;
};

// First place h fails to preserve structure, or nullopt when h is a morphism.
// Constants are checked first, then binary operations in ascending (a,b).
inline std::optional<MorphismViolation> is_morphism(const Algebra& src,
                                                    const Algebra& dst,
                                                    const std::vector<Element>& map) {
  detail::require(static_cast<int>(map.size()) == src.n,
                  "is_morphism: map size differs from source size");
  for (Element v : map)
    detail::require(v >= 0 && v < dst.n, "is_morphism: map value out of range");
  if (map[src.zero] != dst.zero) return MorphismViolation{"zero", src.zero, -1};
  if (map[src.one] != dst.one) return MorphismViolation{"one", src.one, -1};
  for (Element a = 0; a < src.n; ++a)
    for (Element b = 0; b < src.n; ++b) {
      if (map[src.join(a, b)] != dst.join(map[a], map[b]))
        return MorphismViolation{"join", a, b};
      if (map[src.meet(a, b)] != dst.meet(map[a], map[b]))
        return MorphismViolation{"meet", a, b};
      if (map[src.prod(a, b)] != dst.prod(map[a], map[b]))
        return MorphismViolation{"prod", a, b};
      if (map[src.impl(a, b)] != dst.impl(map[a], map[b]))
        return MorphismViolation{"impl", a, b};
    }
  return std::nullopt;
}

// Ker(h) = h^{-1}(1).
inline FilterSet kernel_set(const Algebra& src, const Algebra& dst,
                            const std::vector<Element>& map) {
  FilterSet K(src.n);
  for (Element a = 0; a < src.n; ++a)
    if (map[a] == dst.one) K.set(a);
  return K;
}

// A validated morphism. Holds copies of both algebras so results of quotient
// and product constructions stay self-contained.
struct Morphism {
  Algebra source;
  Algebra target;
  std::vector<Element> map;
  bool injective = false;
  bool surjective = false;

  Element operator()(Element a) const { return map[a]; }

  static Morphism make(const Algebra& src, const Algebra& dst,
                       std::vector<Element> map) {
    if (auto bad = is_morphism(src, dst, map)) {
      std::string msg = "not a morphism: " + bad->op + " at (" + src.label(bad->a);
      if (bad->b >= 0) msg += "," + src.label(bad->b);
      msg += ")";
      throw std::invalid_argument(msg);
    }
    Morphism m;
    m.source = src;
    m.target = dst;
    m.map = std::move(map);
    std::vector<char> hit(static_cast<std::size_t>(dst.n), 0);
    for (Element v : m.map) hit[v] = 1;
    m.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    m.injective = true;
    for (Element a = 0; a < src.n && m.injective; ++a)
      for (Element b = a + 1; b < src.n; ++b)
        if (m.map[a] == m.map[b]) {
          m.injective = false;
          break;
        }
    // h is injective iff its kernel is {1}.
    const bool trivial_kernel =
        kernel_set(src, dst, m.map) == trivial_filter(src);
    detail::ensure(m.injective == trivial_kernel,
                   "Morphism: injectivity disagrees with the kernel criterion");
    return m;
  }
};

inline FilterSet kernel(const Morphism& h) {
  FilterSet K = kernel_set(h.source, h.target, h.map);
  detail::ensure(is_filter(h.source, K), "kernel: h^{-1}(1) is not a filter");
  if (h.target.n > 1)
    detail::ensure(is_proper(h.source, K),
                   "kernel: improper kernel against a nontrivial target");
  return K;
}

// h^{-1}(G). Filterhood, primeness, and maximality all transport backwards.
// Maximality does so for any morphism of finite algebras, surjective or not:
// the quotient by the preimage embeds into the simple quotient by G, every
// non-unit of a simple algebra is nilpotent, so the embedded subalgebra is
// simple too and the preimage is maximal.
inline FilterSet preimage_filter(const Morphism& h, const FilterSet& G) {
  detail::require(G.universe_size() == h.target.n,
                  "preimage_filter: filter lives in the wrong algebra");
  detail::require(is_filter(h.target, G), "preimage_filter: not a filter");
  FilterSet F(h.source.n);
  for (Element a = 0; a < h.source.n; ++a)
    if (G.test(h.map[a])) F.set(a);
  detail::ensure(is_filter(h.source, F), "preimage_filter: preimage is not a filter");
  detail::ensure(is_proper(h.target, G) == is_proper(h.source, F),
                 "preimage_filter: properness not preserved");
  if (is_prime_filter(h.target, G))
    detail::ensure(is_prime_filter(h.source, F),
                   "preimage_filter: preimage of a prime filter is not prime");
  const auto maxT = max_filters(h.target);
  if (std::find(maxT.begin(), maxT.end(), G) != maxT.end()) {
    const auto maxS = max_filters(h.source);
    detail::ensure(std::find(maxS.begin(), maxS.end(), F) != maxS.end(),
                   "preimage_filter: preimage of a maximal filter is not maximal");
  }
  return F;
}

// h(F) for surjective h. The image of a filter along a surjection is a
// filter; a maximal filter maps to a maximal one when the image is proper.
inline FilterSet image_filter(const Morphism& h, const FilterSet& F) {
  detail::require(h.surjective, "image_filter: requires a surjective morphism");
  detail::require(F.universe_size() == h.source.n,
                  "image_filter: filter lives in the wrong algebra");
  detail::require(is_filter(h.source, F), "image_filter: not a filter");
  FilterSet G(h.target.n);
  for (Element a = 0; a < h.source.n; ++a)
    if (F.test(a)) G.set(h.map[a]);
  detail::ensure(is_filter(h.target, G), "image_filter: image is not a filter");
  const auto maxS = max_filters(h.source);
  if (std::find(maxS.begin(), maxS.end(), F) != maxS.end() &&
      is_proper(h.target, G)) {
    const auto maxT = max_filters(h.target);
    detail::ensure(std::find(maxT.begin(), maxT.end(), G) != maxT.end(),
                   "image_filter: proper image of a maximal filter is not maximal");
  }
  return G;
}

namespace detail {

// Invariants cheap enough to rule out most non-isomorphic pairs before the
// backtracking search: per-element signatures must match as multisets.
using ElementSignature = std::tuple<int, int, int, bool, int>;

inline ElementSignature element_signature(const Algebra& A, Element a) {
  int up = 0, down = 0;
  for (Element b = 0; b < A.n; ++b) {
    if (A.leq(a, b)) ++up;
    if (A.leq(b, a)) ++down;
  }
  const auto o = ord(A, a);
  const auto on = ord(A, A.neg(a));
  return {up, down, o ? *o : -1, A.prod(a, a) == a, on ? *on : -1};
}

inline bool signatures_match(const Algebra& A, const Algebra& B) {
  std::vector<ElementSignature> sa, sb;
  for (Element a = 0; a < A.n; ++a) sa.push_back(element_signature(A, a));
  for (Element b = 0; b < B.n; ++b) sb.push_back(element_signature(B, b));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

inline bool extend_isomorphism(const Algebra& A, const Algebra& B,
                               std::vector<Element>& map, std::vector<char>& used,
                               const std::vector<ElementSignature>& sigA,
                               const std::vector<ElementSignature>& sigB,
                               Element next) {
  while (next < A.n && map[next] >= 0) ++next;
  if (next == A.n) return !is_morphism(A, B, map).has_value();
  for (Element cand = 0; cand < B.n; ++cand) {
    if (used[cand] || sigA[next] != sigB[cand]) continue;
    // Consistency against the already-placed elements under all four tables.
    bool ok = true;
    for (Element a = 0; a < A.n && ok; ++a) {
      if (map[a] < 0) continue;
      const Element x = map[a];
      ok = A.leq(next, a) == B.leq(cand, x) && A.leq(a, next) == B.leq(x, cand);
      if (!ok) break;
      for (Element b = 0; b < A.n; ++b) {
        if (map[b] < 0) continue;
        const Element y = map[b];
        const Element pj = map[A.join(a, b)], pm = map[A.meet(a, b)],
                      pp = map[A.prod(a, b)], pi = map[A.impl(a, b)];
        if ((pj >= 0 && pj != B.join(x, y)) || (pm >= 0 && pm != B.meet(x, y)) ||
            (pp >= 0 && pp != B.prod(x, y)) || (pi >= 0 && pi != B.impl(x, y))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_isomorphism(A, B, map, used, sigA, sigB, next + 1)) return true;
    map[next] = -1;
    used[cand] = 0;
  }
  return false;
}

}  // namespace detail

// Lexicographically least isomorphism A → B, or nullopt when none exists.
// Refuses algebras beyond the search cap rather than running unbounded.
inline std::optional<Morphism> find_isomorphism(const Algebra& A, const Algebra& B,
                                                int size_cap = 24) {
  detail::require(A.n <= size_cap && B.n <= size_cap,
                  "find_isomorphism: algebra exceeds the search cap");
  if (A.n != B.n) return std::nullopt;
  if (all_filters(A).size() != all_filters(B).size()) return std::nullopt;
  if (spec(A).size() != spec(B).size()) return std::nullopt;
  if (max_filters(A).size() != max_filters(B).size()) return std::nullopt;
  if (!detail::signatures_match(A, B)) return std::nullopt;

  std::vector<detail::ElementSignature> sigA, sigB;
  for (Element a = 0; a < A.n; ++a) sigA.push_back(detail::element_signature(A, a));
  for (Element b = 0; b < B.n; ++b) sigB.push_back(detail::element_signature(B, b));
  std::vector<Element> map(static_cast<std::size_t>(A.n), -1);
  std::vector<char> used(static_cast<std::size_t>(B.n), 0);
  map[A.zero] = B.zero;
  used[B.zero] = 1;
  if (map[A.one] < 0) {
    map[A.one] = B.one;
    used[B.one] = 1;
  }
  if (!detail::extend_isomorphism(A, B, map, used, sigA, sigB, 0))
    return std::nullopt;
  Morphism m = Morphism::make(A, B, map);
  detail::ensure(m.injective && m.surjective, "find_isomorphism: found map is not bijective");
  return m;
}

}  // namespace reslat

#endif  // RESLAT_MORPHISM_HPP
