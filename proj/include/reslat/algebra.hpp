#ifndef RESLAT_ALGEBRA_HPP
#define RESLAT_ALGEBRA_HPP

// Core type: a finite commutative integral residuated bounded lattice given by
// operation tables, plus the element-level toolkit (order, negation, powers,
// ord, element classification, generated subalgebras, cover-relation input).
//
// Elements are canonical 0-based indices; labels are presentation-only.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reslat {

using Element = int;

// Thrown when a theorem-backed internal assertion fails: the implementation,
// not the caller's input, is inconsistent.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

// Precondition check on caller input.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Consistency check on facts the theory guarantees.
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace detail

struct Violation {
  std::string law;                // e.g. "residuation", "prod-associative"
  std::vector<Element> witness;   // elements instantiating the failure
};

struct VerifyReport {
  // Malformed-table problems (sizes, ranges, duplicate labels). When nonempty
  // the law sweep is skipped: the tables cannot be interpreted.
  std::vector<std::string> structural;
  // Axiom failures with witnesses; the sweep collects all of them.
  std::vector<Violation> violations;

  bool ok() const { return structural.empty() && violations.empty(); }
};

struct Algebra {
  std::string name;
  int n = 0;
  std::vector<std::string> labels;
  Element zero = 0;
  Element one = 0;
  // Row-major n*n tables.
  std::vector<Element> join_t, meet_t, prod_t, impl_t;

  Element join(Element a, Element b) const { return join_t[a * n + b]; }
  Element meet(Element a, Element b) const { return meet_t[a * n + b]; }
  Element prod(Element a, Element b) const { return prod_t[a * n + b]; }
  Element impl(Element a, Element b) const { return impl_t[a * n + b]; }

  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  Element neg(Element a) const { return impl(a, zero); }
  Element biimpl(Element a, Element b) const {
    return meet(impl(a, b), impl(b, a));
  }

  const std::string& label(Element a) const { return labels[a]; }
};

// ---- rendering helpers ----------------------------------------------------

inline std::string label_list(const Algebra& A, const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += A.label(xs[i]);
  }
  out += "}";
  return out;
}

// ---- spec-facing operation aliases ----------------------------------------

inline bool leq(const Algebra& A, Element a, Element b) { return A.leq(a, b); }
inline Element neg(const Algebra& A, Element a) { return A.neg(a); }
inline Element biimpl(const Algebra& A, Element a, Element b) {
  return A.biimpl(a, b);
}

// a^0 = 1, a^k = a^(k-1) ⊙ a.
inline Element power(const Algebra& A, Element a, int k) {
  detail::require(k >= 0, "power: negative exponent");
  Element p = A.one;
  for (int i = 0; i < k; ++i) p = A.prod(p, a);
  return p;
}

// ord(a) = least k with a^k = 0; nullopt means infinite. Cycle detection (the
// power sequence of a finite algebra is eventually periodic) keeps it exact.
inline std::optional<int> ord(const Algebra& A, Element a) {
  std::vector<char> seen(static_cast<std::size_t>(A.n), 0);
  Element p = A.one;
  int k = 0;
  while (true) {
    if (p == A.zero) return k;
    if (seen[p]) return std::nullopt;
    seen[p] = 1;
    p = A.prod(p, a);
    ++k;
  }
}

struct ElementClass {
  bool nilpotent = false;  // ord(a) finite
  bool unity = false;      // ¬(a^k) nilpotent for every k ≥ 0
  bool finite = false;     // a and ¬a both nilpotent (literal definition)
};

inline ElementClass classify_element(const Algebra& A, Element a) {
  ElementClass c;
  c.nilpotent = ord(A, a).has_value();
  c.finite = c.nilpotent && ord(A, A.neg(a)).has_value();
  // One period of the power sequence covers every a^k.
  c.unity = true;
  std::vector<char> seen(static_cast<std::size_t>(A.n), 0);
  Element p = A.one;
  while (!seen[p]) {
    seen[p] = 1;
    if (!ord(A, A.neg(p)).has_value()) {
      c.unity = false;
      break;
    }
    p = A.prod(p, a);
  }
  return c;
}

// ---- axiom verification ----------------------------------------------------

inline VerifyReport verify_axioms(const Algebra& A) {
  VerifyReport rep;
  auto structural = [&rep](const std::string& msg) {
    rep.structural.push_back(msg);
  };

  if (A.n < 1) structural("element count must be at least 1");
  if (static_cast<int>(A.labels.size()) != A.n)
    structural("label count differs from element count");
  for (std::size_t i = 0; i < A.labels.size(); ++i) {
    if (A.labels[i].empty()) structural("empty label at index " + std::to_string(i));
    for (std::size_t j = i + 1; j < A.labels.size(); ++j)
      if (A.labels[i] == A.labels[j])
        structural("duplicate label \"" + A.labels[i] + "\"");
  }
  if (A.zero < 0 || A.zero >= A.n) structural("zero out of range");
  if (A.one < 0 || A.one >= A.n) structural("one out of range");
  const std::size_t want = static_cast<std::size_t>(A.n) * A.n;
  auto check_table = [&](const std::vector<Element>& t, const char* nm) {
    if (t.size() != want) {
      structural(std::string(nm) + " table has wrong size");
      return;
    }
    for (Element v : t)
      if (v < 0 || v >= A.n) {
        structural(std::string(nm) + " table entry out of range");
        return;
      }
  };
  check_table(A.join_t, "join");
  check_table(A.meet_t, "meet");
  check_table(A.prod_t, "prod");
  check_table(A.impl_t, "impl");
  if (!rep.structural.empty()) return rep;

  auto fail = [&rep](const char* law, std::vector<Element> w) {
    rep.violations.push_back(Violation{law, std::move(w)});
  };

  for (Element a = 0; a < A.n; ++a) {
    if (A.join(a, a) != a) fail("join-idempotent", {a});
    if (A.meet(a, a) != a) fail("meet-idempotent", {a});
    if (A.prod(a, A.one) != a) fail("prod-unit", {a});
    if (A.join(A.zero, a) != a) fail("zero-bottom", {a});
    if (A.meet(A.one, a) != a) fail("one-top", {a});
  }
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b) {
      if (A.join(a, b) != A.join(b, a)) fail("join-commutative", {a, b});
      if (A.meet(a, b) != A.meet(b, a)) fail("meet-commutative", {a, b});
      if (A.prod(a, b) != A.prod(b, a)) fail("prod-commutative", {a, b});
      if (A.join(a, A.meet(a, b)) != a) fail("absorption-join", {a, b});
      if (A.meet(a, A.join(a, b)) != a) fail("absorption-meet", {a, b});
    }
  for (Element a = 0; a < A.n; ++a)
    for (Element b = 0; b < A.n; ++b)
      for (Element c = 0; c < A.n; ++c) {
        if (A.join(A.join(a, b), c) != A.join(a, A.join(b, c)))
          fail("join-associative", {a, b, c});
        if (A.meet(A.meet(a, b), c) != A.meet(a, A.meet(b, c)))
          fail("meet-associative", {a, b, c});
        if (A.prod(A.prod(a, b), c) != A.prod(a, A.prod(b, c)))
          fail("prod-associative", {a, b, c});
        // Adjunction: a ≤ b→c ⇔ a⊙b ≤ c.
        if (A.leq(a, A.impl(b, c)) != A.leq(A.prod(a, b), c))
          fail("residuation", {a, b, c});
      }
  return rep;
}

inline std::string describe(const Algebra& A, const Violation& v) {
  std::string out = v.law + " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ",";
    out += A.label(v.witness[i]);
  }
  out += ")";
  return out;
}

// ---- lattices from cover relations -----------------------------------------

struct CoverLattice {
  std::vector<Element> join_t, meet_t;   // only meaningful when errors empty
  std::vector<std::string> errors;
};

// Builds join/meet tables from Hasse edges (lower, upper). Reports every
// defect it can see: cycles, wrong bounds, missing joins or meets.
inline CoverLattice lattice_from_covers(int n,
                                        const std::vector<std::pair<Element, Element>>& covers,
                                        Element zero, Element one) {
  CoverLattice out;
  auto err = [&out](const std::string& m) { out.errors.push_back(m); };
  if (n < 1) {
    err("element count must be at least 1");
    return out;
  }
  if (zero < 0 || zero >= n || one < 0 || one >= n) {
    err("zero/one out of range");
    return out;
  }
  std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
  auto at = [&le, n](Element i, Element j) -> char& { return le[i * n + j]; };
  for (Element i = 0; i < n; ++i) at(i, i) = 1;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
      err("cover edge out of range");
      return out;
    }
    at(lo, hi) = 1;
  }
  // Reflexive-transitive closure.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (at(i, k))
        for (Element j = 0; j < n; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (at(i, j) && at(j, i))
        err("cover relation has a cycle through " + std::to_string(i) + " and " +
            std::to_string(j));
  for (Element i = 0; i < n; ++i) {
    if (!at(zero, i)) err("element " + std::to_string(i) + " is not above zero");
    if (!at(i, one)) err("element " + std::to_string(i) + " is not below one");
  }
  if (!out.errors.empty()) return out;

  out.join_t.assign(static_cast<std::size_t>(n) * n, 0);
  out.meet_t.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      std::vector<Element> ub, lb;
      for (Element x = 0; x < n; ++x) {
        if (at(i, x) && at(j, x)) ub.push_back(x);
        if (at(x, i) && at(x, j)) lb.push_back(x);
      }
      Element lub = -1, glb = -1;
      for (Element u : ub) {
        bool least = true;
        for (Element v : ub)
          if (!at(u, v)) { least = false; break; }
        if (least) { lub = u; break; }
      }
      for (Element u : lb) {
        bool greatest = true;
        for (Element v : lb)
          if (!at(v, u)) { greatest = false; break; }
        if (greatest) { glb = u; break; }
      }
      if (lub < 0)
        err("no least upper bound for " + std::to_string(i) + "," + std::to_string(j));
      if (glb < 0)
        err("no greatest lower bound for " + std::to_string(i) + "," + std::to_string(j));
      if (lub >= 0) out.join_t[i * n + j] = lub;
      if (glb >= 0) out.meet_t[i * n + j] = glb;
    }
  return out;
}

// ---- generated subalgebras --------------------------------------------------

struct SubalgebraResult {
  Algebra algebra;
  std::vector<Element> embedding;  // sub index -> parent element (ascending)
};

// Closure of X ∪ {0,1} under all four operations, packaged as a standalone
// algebra. The closure of a verified algebra verifies again by construction,
// which is asserted anyway.
inline SubalgebraResult subalgebra_generated(const Algebra& A,
                                             const std::vector<Element>& X) {
  for (Element x : X)
    detail::require(x >= 0 && x < A.n, "subalgebra_generated: element out of range");
  std::vector<char> in(static_cast<std::size_t>(A.n), 0);
  in[A.zero] = in[A.one] = 1;
  for (Element x : X) in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a = 0; a < A.n; ++a) {
      if (!in[a]) continue;
      for (Element b = 0; b < A.n; ++b) {
        if (!in[b]) continue;
        for (Element v : {A.join(a, b), A.meet(a, b), A.prod(a, b), A.impl(a, b)})
          if (!in[v]) { in[v] = 1; grew = true; }
      }
    }
  }
  SubalgebraResult res;
  std::vector<Element> to_sub(static_cast<std::size_t>(A.n), -1);
  for (Element a = 0; a < A.n; ++a)
    if (in[a]) {
      to_sub[a] = static_cast<Element>(res.embedding.size());
      res.embedding.push_back(a);
    }
  const int m = static_cast<int>(res.embedding.size());
  Algebra& S = res.algebra;
  S.name = "sub(" + A.name + ")";
  S.n = m;
  S.zero = to_sub[A.zero];
  S.one = to_sub[A.one];
  S.labels.reserve(m);
  for (Element a : res.embedding) S.labels.push_back(A.label(a));
  S.join_t.resize(static_cast<std::size_t>(m) * m);
  S.meet_t.resize(static_cast<std::size_t>(m) * m);
  S.prod_t.resize(static_cast<std::size_t>(m) * m);
  S.impl_t.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Element a = res.embedding[i], b = res.embedding[j];
      S.join_t[i * m + j] = to_sub[A.join(a, b)];
      S.meet_t[i * m + j] = to_sub[A.meet(a, b)];
      S.prod_t[i * m + j] = to_sub[A.prod(a, b)];
      S.impl_t[i * m + j] = to_sub[A.impl(a, b)];
    }
  detail::ensure(verify_axioms(S).ok(),
                 "subalgebra_generated: closure failed the axiom sweep");
  return res;
}

// ---- element subsets --------------------------------------------------------

// Subset of an algebra's elements as a bitset. Also the representation of
// filters (FilterSet below); the universe size doubles as an owner check.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  int universe_size() const { return n_; }
  bool test(Element a) const { return (bits_[a >> 6] >> (a & 63)) & 1u; }
  void set(Element a) { bits_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  void reset(Element a) { bits_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
  }
  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (Element a = 0; a < n_; ++a)
      if (test(a)) out.push_back(a);
    return out;
  }

  friend bool operator==(const ElemSet& x, const ElemSet& y) {
    return x.n_ == y.n_ && x.bits_ == y.bits_;
  }
  friend bool operator!=(const ElemSet& x, const ElemSet& y) { return !(x == y); }

  // Deterministic total order: cardinality, then ascending-element
  // lexicographic (the set containing the lowest differing element first).
  friend bool operator<(const ElemSet& x, const ElemSet& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    const int cx = x.count(), cy = y.count();
    if (cx != cy) return cx < cy;
    for (std::size_t i = 0; i < x.bits_.size(); ++i) {
      const std::uint64_t diff = x.bits_[i] ^ y.bits_[i];
      if (diff) return (x.bits_[i] >> __builtin_ctzll(diff)) & 1u;
    }
    return false;
  }

  static ElemSet intersect(const ElemSet& x, const ElemSet& y) {
    ElemSet r(x.n_);
    for (std::size_t i = 0; i < r.bits_.size(); ++i)
      r.bits_[i] = x.bits_[i] & y.bits_[i];
    return r;
  }
  static ElemSet unite(const ElemSet& x, const ElemSet& y) {
    ElemSet r(x.n_);
    for (std::size_t i = 0; i < r.bits_.size(); ++i)
      r.bits_[i] = x.bits_[i] | y.bits_[i];
    return r;
  }
  static ElemSet full(int universe) {
    ElemSet r(universe);
    for (Element a = 0; a < universe; ++a) r.set(a);
    return r;
  }
  static ElemSet of(int universe, std::initializer_list<Element> xs) {
    ElemSet r(universe);
    for (Element a : xs) r.set(a);
    return r;
  }
  static ElemSet of(int universe, const std::vector<Element>& xs) {
    ElemSet r(universe);
    for (Element a : xs) r.set(a);
    return r;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

using FilterSet = ElemSet;

inline std::string label_set(const Algebra& A, const ElemSet& S) {
  return label_list(A, S.elements());
}

}  // namespace reslat

#endif  // RESLAT_ALGEBRA_HPP
