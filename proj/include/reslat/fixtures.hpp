#ifndef RESLAT_FIXTURES_HPP
#define RESLAT_FIXTURES_HPP

// Named example algebras: small chains with Gödel and Łukasiewicz products,
// the four-element Boolean algebra, and the six-element algebra whose
// idempotents fail to lift modulo the radical.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "reslat/products.hpp"

namespace reslat {

namespace detail {

inline std::vector<std::string> chain_labels(int k) {
  // Conventional names for the small chains; positional names past order 4.
  if (k == 2) return {"0", "1"};
  if (k == 3) return {"0", "m", "1"};
  if (k == 4) return {"0", "a", "b", "1"};
  std::vector<std::string> out;
  out.push_back("0");
  for (int i = 1; i < k - 1; ++i) out.push_back("x" + std::to_string(i));
  out.push_back("1");
  return out;
}

inline Algebra chain_base(const std::string& name, int k) {
  Algebra A;
  A.name = name;
  A.n = k;
  A.labels = chain_labels(k);
  A.zero = 0;
  A.one = k - 1;
  A.join_t.resize(static_cast<std::size_t>(k) * k);
  A.meet_t.resize(static_cast<std::size_t>(k) * k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      A.join_t[a * k + b] = std::max(a, b);
      A.meet_t[a * k + b] = std::min(a, b);
    }
  A.prod_t.resize(static_cast<std::size_t>(k) * k);
  A.impl_t.resize(static_cast<std::size_t>(k) * k);
  return A;
}

}  // namespace detail

// Gödel chain: ⊙ = ∧, a→b = 1 if a ≤ b else b.
inline Algebra godel_chain(int k) {
  detail::require(k >= 2, "godel_chain: need at least two elements");
  Algebra A = detail::chain_base("godel" + std::to_string(k), k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      A.prod_t[a * k + b] = std::min(a, b);
      A.impl_t[a * k + b] = a <= b ? k - 1 : b;
    }
  detail::ensure(verify_axioms(A).ok(), "godel_chain: axiom sweep failed");
  return A;
}

// Łukasiewicz chain on {0, 1/(k-1), …, 1}: a⊙b = max(0, a+b-1),
// a→b = min(1, 1-a+b), both in index arithmetic.
inline Algebra lukasiewicz_chain(int k) {
  detail::require(k >= 2, "lukasiewicz_chain: need at least two elements");
  Algebra A = detail::chain_base("lukasiewicz" + std::to_string(k), k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      A.prod_t[a * k + b] = std::max(0, a + b - (k - 1));
      A.impl_t[a * k + b] = std::min(k - 1, k - 1 - a + b);
    }
  detail::ensure(verify_axioms(A).ok(), "lukasiewicz_chain: axiom sweep failed");
  return A;
}

// Six-element algebra on 0 < {b, d} with d < c, b ∨ c = a, a < 1: the
// standard witness that a dense radical does not make idempotents lift.
inline Algebra g6_algebra() {
  Algebra A;
  A.name = "g6";
  A.n = 6;
  A.labels = {"0", "a", "b", "c", "d", "1"};
  A.zero = 0;
  A.one = 5;
  const CoverLattice lat = lattice_from_covers(
      6, {{0, 2}, {0, 4}, {4, 3}, {2, 1}, {3, 1}, {1, 5}}, 0, 5);
  detail::ensure(lat.errors.empty(), "g6_algebra: cover relation rejected");
  A.join_t = lat.join_t;
  A.meet_t = lat.meet_t;
  A.prod_t = {0, 0, 0, 0, 0, 0,   //
              0, 1, 2, 4, 4, 1,   //
              0, 2, 2, 0, 0, 2,   //
              0, 4, 0, 4, 4, 3,   //
              0, 4, 0, 4, 4, 4,   //
              0, 1, 2, 3, 4, 5};
  A.impl_t = {5, 5, 5, 5, 5, 5,   //
              0, 5, 2, 3, 3, 5,   //
              3, 5, 5, 3, 3, 5,   //
              2, 5, 2, 5, 1, 5,   //
              2, 5, 2, 5, 5, 5,   //
              0, 1, 2, 3, 4, 5};
  detail::ensure(verify_axioms(A).ok(), "g6_algebra: axiom sweep failed");
  return A;
}

inline Algebra boolean4_algebra() {
  ProductAlgebra P = direct_product({godel_chain(2), godel_chain(2)});
  P.algebra.name = "boolean4";
  return P.algebra;
}

inline std::vector<std::string> fixture_names() {
  return {"g6", "chain2", "godel3", "lukasiewicz3", "godel4", "lukasiewicz4",
          "boolean4"};
}

inline Algebra fixture(const std::string& name) {
  std::string key;
  for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "g6") return g6_algebra();
  if (key == "chain2") {
    Algebra A = godel_chain(2);
    A.name = "chain2";
    return A;
  }
  if (key == "godel3") return godel_chain(3);
  if (key == "lukasiewicz3") return lukasiewicz_chain(3);
  if (key == "godel4") return godel_chain(4);
  if (key == "lukasiewicz4") return lukasiewicz_chain(4);
  if (key == "boolean4") return boolean4_algebra();
  throw std::invalid_argument("fixture: unknown name \"" + name + "\"");
}

}  // namespace reslat

#endif  // RESLAT_FIXTURES_HPP
