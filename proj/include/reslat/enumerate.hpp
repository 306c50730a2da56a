#ifndef RESLAT_ENUMERATE_HPP
#define RESLAT_ENUMERATE_HPP

// Exhaustive generation of all residuated lattices of a given small order, up
// to isomorphism: enumerate the bounded lattices on n labeled elements, then
// the admissible commutative monoid tables on each, derive the residuum, run
// the full axiom sweep, and deduplicate by a canonical table form. A separate
// slow path over raw ⊙-tables provides an independent count for tiny orders.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "reslat/morphism.hpp"
#include "reslat/products.hpp"

namespace reslat {

struct EnumerateOptions {
  int max_order = 5;  // refusal threshold for the exhaustive search
};

struct CatalogTallies {
  std::size_t total = 0;
  std::size_t local = 0;
  std::size_t perfect = 0;
  std::size_t radical_dense = 0;
  std::size_t has_lifting = 0;
};

struct Catalog {
  int order = 0;
  std::vector<Algebra> entries;  // sorted by canonical table form
  CatalogTallies tallies;
};

namespace detail {

// All bounded lattice orders on {0, mids…, n-1} with 0 bottom and n-1 top,
// as (join, meet) table pairs. Labeled enumeration: every assignment of
// {<, >, incomparable} to each pair of mid elements that happens to be
// transitive and lattice-complete is kept; isomorphic duplicates are removed
// later at the algebra level.
inline std::vector<std::pair<std::vector<Element>, std::vector<Element>>>
all_bounded_lattices(int n) {
  std::vector<std::pair<std::vector<Element>, std::vector<Element>>> out;
  if (n == 1) {
    out.push_back({{0}, {0}});
    return out;
  }
  const int mids = n - 2;
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 1; i + 1 < n; ++i)
    for (Element j = i + 1; j + 1 < n; ++j) pairs.emplace_back(i, j);
  long long codes = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) codes *= 3;

  std::vector<char> le(static_cast<std::size_t>(n) * n);
  for (long long code = 0; code < codes; ++code) {
    std::fill(le.begin(), le.end(), 0);
    auto at = [&](Element i, Element j) -> char& { return le[i * n + j]; };
    for (Element i = 0; i < n; ++i) {
      at(i, i) = 1;
      at(0, i) = 1;
      at(i, n - 1) = 1;
    }
    long long rest = code;
    for (const auto& [i, j] : pairs) {
      const int state = static_cast<int>(rest % 3);
      rest /= 3;
      if (state == 1) at(i, j) = 1;
      if (state == 2) at(j, i) = 1;
    }
    bool transitive = true;
    for (Element x = 1; x + 1 < n && transitive; ++x)
      for (Element y = 1; y + 1 < n && transitive; ++y)
        for (Element z = 1; z + 1 < n; ++z)
          if (at(x, y) && at(y, z) && !at(x, z)) {
            transitive = false;
            break;
          }
    if (!transitive) continue;

    std::vector<Element> join_t(static_cast<std::size_t>(n) * n),
        meet_t(static_cast<std::size_t>(n) * n);
    bool lattice = true;
    for (Element i = 0; i < n && lattice; ++i)
      for (Element j = 0; j < n; ++j) {
        Element lub = -1, glb = -1;
        for (Element x = 0; x < n; ++x) {
          if (at(i, x) && at(j, x)) {
            bool least = true;
            for (Element y = 0; y < n; ++y)
              if (at(i, y) && at(j, y) && !at(x, y)) {
                least = false;
                break;
              }
            if (least) lub = x;
          }
          if (at(x, i) && at(x, j)) {
            bool greatest = true;
            for (Element y = 0; y < n; ++y)
              if (at(y, i) && at(y, j) && !at(y, x)) {
                greatest = false;
                break;
              }
            if (greatest) glb = x;
          }
        }
        if (lub < 0 || glb < 0) {
          lattice = false;
          break;
        }
        join_t[i * n + j] = lub;
        meet_t[i * n + j] = glb;
      }
    if (lattice) out.push_back({join_t, meet_t});
  }
  return out;
}

// Minimum-lexicographic concatenation of the four tables over all
// permutations fixing 0 and n-1. Exact isomorphism-class key at these sizes.
inline std::vector<Element> canonical_key(const Algebra& A) {
  const int n = A.n;
  std::vector<Element> mids;
  for (Element i = 1; i + 1 < n; ++i) mids.push_back(i);
  std::vector<Element> best;
  std::vector<Element> perm(static_cast<std::size_t>(n));
  std::vector<Element> arrangement = mids;
  do {
    perm[0] = 0;
    if (n > 1) perm[n - 1] = n - 1;
    for (std::size_t i = 0; i < mids.size(); ++i) perm[mids[i]] = arrangement[i];
    std::vector<Element> key;
    key.reserve(static_cast<std::size_t>(4) * n * n);
    for (const std::vector<Element>* t : {&A.join_t, &A.meet_t, &A.prod_t, &A.impl_t}) {
      std::vector<Element> img(static_cast<std::size_t>(n) * n);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          img[perm[a] * n + perm[b]] = perm[(*t)[a * n + b]];
      key.insert(key.end(), img.begin(), img.end());
    }
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return best;
}

inline std::vector<std::string> catalog_labels(int n) {
  std::vector<std::string> labels;
  labels.push_back("0");
  for (int i = 1; i + 1 < n; ++i) {
    if (i <= 26)
      labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    else
      labels.push_back("m" + std::to_string(i));
  }
  if (n > 1) labels.push_back("1");
  return labels;
}

inline Algebra algebra_from_key(int n, const std::vector<Element>& key) {
  Algebra A;
  A.n = n;
  A.labels = catalog_labels(n);
  A.zero = 0;
  A.one = n - 1;
  const std::size_t sq = static_cast<std::size_t>(n) * n;
  A.join_t.assign(key.begin(), key.begin() + sq);
  A.meet_t.assign(key.begin() + sq, key.begin() + 2 * sq);
  A.prod_t.assign(key.begin() + 2 * sq, key.begin() + 3 * sq);
  A.impl_t.assign(key.begin() + 3 * sq, key.begin() + 4 * sq);
  return A;
}

// Residuum b→c = max{x : x⊙b ≤ c} under the given order; false when some
// pair has upper bounds without a greatest one.
inline bool derive_impl(const Algebra& A, std::vector<Element>& impl_t) {
  const int n = A.n;
  impl_t.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<Element> sat;
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c) {
      sat.clear();
      for (Element x = 0; x < n; ++x)
        if (A.leq(A.prod(x, b), c)) sat.push_back(x);
      Element best = -1;
      for (Element x : sat) {
        bool dominates = true;
        for (Element y : sat)
          if (!A.leq(y, x)) {
            dominates = false;
            break;
          }
        if (dominates) {
          best = x;
          break;
        }
      }
      if (best < 0) return false;  // empty set or no greatest member
      impl_t[b * n + c] = best;
    }
  return true;
}

}  // namespace detail

// Exhaustive catalog of order n up to isomorphism.
inline Catalog enumerate_algebras(int n, const EnumerateOptions& opt = {}) {
  detail::require(n >= 1, "enumerate_algebras: order must be positive");
  detail::require(n <= opt.max_order, "enumerate_algebras: order exceeds cap " +
                                          std::to_string(opt.max_order));
  Catalog cat;
  cat.order = n;
  std::map<std::vector<Element>, char> seen;

  for (const auto& [join_t, meet_t] : detail::all_bounded_lattices(n)) {
    Algebra A;
    A.n = n;
    A.labels = detail::catalog_labels(n);
    A.zero = 0;
    A.one = n - 1;
    A.join_t = join_t;
    A.meet_t = meet_t;
    A.prod_t.assign(static_cast<std::size_t>(n) * n, -1);
    auto set_prod = [&](Element a, Element b, Element v) {
      A.prod_t[a * n + b] = v;
      A.prod_t[b * n + a] = v;
    };
    for (Element a = 0; a < n; ++a) {
      set_prod(a, n - 1, a);  // 1 is the unit
      if (n > 1) set_prod(a, 0, 0);
    }
    std::vector<std::pair<Element, Element>> cells;
    for (Element i = 1; i + 1 < n; ++i)
      for (Element j = i; j + 1 < n; ++j) cells.emplace_back(i, j);

    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
      if (idx == cells.size()) {
        // Every cell is filled: derive the residuum and run the full sweep.
        std::vector<Element> impl_t;
        if (!detail::derive_impl(A, impl_t)) return;
        Algebra cand = A;
        cand.impl_t = std::move(impl_t);
        if (!verify_axioms(cand).ok()) return;
        seen.emplace(detail::canonical_key(cand), 1);
        return;
      }
      const auto [i, j] = cells[idx];
      const Element cap = A.meet(i, j);  // a⊙b ≤ a∧b in any residuated lattice
      for (Element v = 0; v < n; ++v) {
        if (!A.leq(v, cap)) continue;
        set_prod(i, j, v);
        dfs(idx + 1);
      }
      set_prod(i, j, -1);
    };
    dfs(0);
  }

  for (const auto& [key, unused] : seen) {
    Algebra A = detail::algebra_from_key(n, key);
    A.name = "cat" + std::to_string(n) + "_" +
             (cat.entries.size() < 10 ? "0" : "") + std::to_string(cat.entries.size());
    detail::ensure(verify_axioms(A).ok(),
                   "enumerate_algebras: canonical rebuild failed the axiom sweep");
    cat.entries.push_back(std::move(A));
  }
  for (const Algebra& A : cat.entries) {
    const Classification c = classify(A);
    ++cat.tallies.total;
    if (c.local) ++cat.tallies.local;
    if (c.perfect) ++cat.tallies.perfect;
    if (c.radical_dense) ++cat.tallies.radical_dense;
    if (c.has_lifting) ++cat.tallies.has_lifting;
  }
  return cat;
}

// Independent count for n ≤ 3: on the unique bounded lattice of that order
// (a chain), try raw ⊙-tables by brute force, derive the residuum, verify,
// and deduplicate by explicit isomorphism search rather than canonical form.
inline Catalog enumerate_algebras_by_table_scan(int n) {
  detail::require(n >= 1 && n <= 3,
                  "enumerate_algebras_by_table_scan: order must be 1..3");
  Catalog cat;
  cat.order = n;
  Algebra base;
  base.n = n;
  base.labels = detail::catalog_labels(n);
  base.zero = 0;
  base.one = n - 1;
  base.join_t.resize(static_cast<std::size_t>(n) * n);
  base.meet_t.resize(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      base.join_t[a * n + b] = std::max(a, b);
      base.meet_t[a * n + b] = std::min(a, b);
    }
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  long long total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    Algebra cand = base;
    cand.prod_t.resize(cells);
    long long rest = code;
    for (std::size_t i = 0; i < cells; ++i) {
      cand.prod_t[i] = static_cast<Element>(rest % n);
      rest /= n;
    }
    std::vector<Element> impl_t;
    if (!detail::derive_impl(cand, impl_t)) continue;
    cand.impl_t = std::move(impl_t);
    if (!verify_axioms(cand).ok()) continue;
    bool fresh = true;
    for (const Algebra& rep : cat.entries)
      if (find_isomorphism(rep, cand).has_value()) {
        fresh = false;
        break;
      }
    if (fresh) {
      cand.name = "scan" + std::to_string(n) + "_" + std::to_string(cat.entries.size());
      cat.entries.push_back(std::move(cand));
    }
  }
  cat.tallies.total = cat.entries.size();
  return cat;
}

}  // namespace reslat

#endif  // RESLAT_ENUMERATE_HPP
