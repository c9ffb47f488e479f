#pragma once

// Topological classification of ordinal spaces. The space named by an
// ordinal a is the half-open interval [0, a) with the order topology, so
// closed intervals like [0, w^k] are passed as the successor w^k+1.

#include "ordram/ordinal.hpp"

namespace ordram {

// The homeomorphism invariant of a nonzero ordinal: leading exponent,
// leading coefficient, and purity. Purity is 0 exactly when the ordinal is
// a single CNF term with nonzero exponent, and w^CB otherwise (w^0 = 1 for
// successors). Two nonzero ordinals are homeomorphic iff their triples agree.
struct HomeoInvariant {
  Ordinal leading_exponent;
  Nat leading_coeff;
  Ordinal purity;

  bool operator==(const HomeoInvariant&) const = default;
};

inline HomeoInvariant homeo_invariant(const Ordinal& a) {
  if (a.is_zero()) throw std::domain_error("homeo_invariant of zero");
  Ordinal purity;
  if (!(a.terms().size() == 1 && !a.leading_exponent().is_zero()))
    purity = omega_power(cb_rank(a));
  return HomeoInvariant{a.leading_exponent(), a.leading_coeff(), purity};
}

inline bool homeomorphic(const Ordinal& a, const Ordinal& b) {
  return homeo_invariant(a) == homeo_invariant(b);
}

/// Least ordinal homeomorphic to a (the canonical class representative).
inline Ordinal homeo_min_rep(const Ordinal& a) {
  if (a.is_zero()) throw std::domain_error("homeo_min_rep of zero");
  if (a.terms().size() == 1) return a;
  Ordinal lead = Ordinal::from_terms(
      {Ordinal::Term{a.leading_exponent(), a.leading_coeff()}});
  return lead + omega_power(cb_rank(a));
}

/// True iff a is finite, w^g (g > 0), or w^g*m+1 (g > 0, m >= 1): exactly
/// the ordinals whose every homeomorphic copy contains an order-homeomorphic
/// copy, so the topological and closed numbers coincide at them.
inline bool order_reinforcing(const Ordinal& a) {
  if (a.is_finite()) return true;
  const auto& ts = a.terms();
  if (ts.size() == 1) return ts[0].coeff == 1 || ts[0].exponent.is_zero();
  return ts.size() == 2 && ts[1].exponent.is_zero() && ts[1].coeff == 1;
}

// Order type of the g-th Cantor-Bendixson derivative of [0, a): for g > 0
// this is the set of nonzero multiples of w^g below a. Returns 0 when the
// derivative is empty.
inline Ordinal derived_space_type(const Ordinal& a, const Ordinal& g) {
  if (g.is_zero()) return a;
  if (a.is_zero()) return Ordinal();
  // a = w^g * q + r with r < w^g
  std::vector<Ordinal::Term> qt;
  bool r_nonzero = false;
  for (const auto& t : a.terms()) {
    if (compare(t.exponent, g) != std::strong_ordering::less)
      qt.push_back(Ordinal::Term{left_subtract(g, t.exponent), t.coeff});
    else
      r_nonzero = true;
  }
  Ordinal q = Ordinal::from_terms(std::move(qt));
  if (q.is_zero()) return Ordinal();
  // order type of [1, q) resp. [1, q]: the unique t with 1 + t = q (+1)
  return r_nonzero ? left_subtract(Ordinal(1), q + Ordinal(1))
                   : left_subtract(Ordinal(1), q);
}

// Anti-tree partial order: with b = h + w^g (h a multiple of w^g, g = CB(b)),
// a <* b means a = h + z for some 0 < z < w^g. Equivalently b = a + w^g'
// for some g' > CB(a).
inline bool less_star(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return false;
  const Ordinal& h = tail_decompose(b).head;
  return h < a && a < b;
}

/// Covering relation of <*: b = a + w^(CB(a)+1).
inline bool covers_star(const Ordinal& a, const Ordinal& b) {
  if (!less_star(a, b)) return false;
  return b == a + omega_power(cb_rank(a) + Ordinal(1));
}

// n-th child of a node in the anti-tree (w^k+1 under >* is a perfect
// aleph_0-tree). With parent = h + w^(d+1), the children are h + w^d*(n+1).
// Nodes with tail exponent 0 are leaves; nodes with limit tail exponent
// have no covers at all, and both are rejected.
inline Ordinal tree_child(const Ordinal& parent, unsigned long long n) {
  if (parent.is_zero()) throw std::domain_error("tree_child of zero");
  TailDecomposition td = tail_decompose(parent);
  if (td.tail_exponent.is_zero())
    throw std::domain_error("tree_child: node is a leaf");
  if (!td.tail_exponent.is_successor())
    throw std::domain_error("tree_child: limit tail exponent has no covers");
  Ordinal d = predecessor(td.tail_exponent);
  std::vector<Ordinal::Term> terms = td.head.terms();
  terms.push_back(Ordinal::Term{std::move(d), Nat(n + 1)});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace ordram
