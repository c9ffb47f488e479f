#pragma once

// Exact arithmetic on ordinals below epsilon_0, represented in hereditary
// Cantor normal form: x = w^e1*c1 + ... + w^en*cn with e1 > ... > en and
// positive integer coefficients. Values are immutable and every operation
// is a pure function, so concurrent use needs no synchronization.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordram {

using Nat = boost::multiprecision::cpp_int;

class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(unsigned long long n);
  explicit Ordinal(const Nat& n);

  static Ordinal omega();
  // Builds an ordinal from a term list, which must already be in CNF
  // (strictly decreasing exponents, coefficients >= 1).
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;

  // Value of a finite ordinal; throws std::domain_error otherwise.
  Nat as_nat() const;

  const Ordinal& leading_exponent() const;  // nonzero only
  const Nat& leading_coeff() const;         // nonzero only
  const Ordinal& last_exponent() const;     // nonzero only

  friend std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

  std::strong_ordering operator<=>(const Ordinal& rhs) const;
  bool operator==(const Ordinal& rhs) const;

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coeff;
};

inline std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms_;
  const auto& tb = b.terms_;
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(ta[i].exponent, tb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff < tb[i].coeff ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  if (ta.size() == tb.size()) return std::strong_ordering::equal;
  return ta.size() < tb.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
}

inline std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const {
  return compare(*this, rhs);
}

inline bool Ordinal::operator==(const Ordinal& rhs) const {
  return compare(*this, rhs) == std::strong_ordering::equal;
}

inline Ordinal::Ordinal(unsigned long long n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), Nat(n)});
}

inline Ordinal::Ordinal(const Nat& n) {
  if (n < 0) throw std::domain_error("ordinal from negative integer");
  if (n != 0) terms_.push_back(Term{Ordinal(), n});
}

inline Ordinal Ordinal::omega() {
  Ordinal x;
  x.terms_.push_back(Term{Ordinal(1), Nat(1)});
  return x;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff < 1)
      throw std::invalid_argument("CNF coefficient must be positive");
    if (i + 1 < terms.size() &&
        compare(terms[i].exponent, terms[i + 1].exponent) !=
            std::strong_ordering::greater)
      throw std::invalid_argument("CNF exponents must strictly decrease");
  }
  Ordinal x;
  x.terms_ = std::move(terms);
  return x;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

inline Nat Ordinal::as_nat() const {
  if (terms_.empty()) return Nat(0);
  if (!is_finite()) throw std::domain_error("ordinal is infinite");
  return terms_[0].coeff;
}

inline const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero has no leading exponent");
  return terms_[0].exponent;
}

inline const Nat& Ordinal::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero has no leading coefficient");
  return terms_[0].coeff;
}

inline const Ordinal& Ordinal::last_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero has no last exponent");
  return terms_.back().exponent;
}

// ---------------------------------------------------------------------------
// Arithmetic

/// w^a as a single-term CNF (so w^0 = 1).
inline Ordinal omega_power(const Ordinal& a) {
  return Ordinal::from_terms({Ordinal::Term{a, Nat(1)}});
}

/// Ordinal sum: terms of a below the leading exponent of b are absorbed.
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& cut = b.leading_exponent();
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (compare(t.exponent, cut) == std::strong_ordering::greater)
      out.push_back(t);
    else
      break;
  }
  std::size_t bi = 0;
  if (!a.terms().empty() && out.size() < a.terms().size() &&
      a.terms()[out.size()].exponent == cut) {
    out.push_back(
        Ordinal::Term{cut, a.terms()[out.size()].coeff + b.terms()[0].coeff});
    bi = 1;
  }
  for (; bi < b.terms().size(); ++bi) out.push_back(b.terms()[bi]);
  return Ordinal::from_terms(std::move(out));
}

/// Ordinal product, distributing a over the CNF terms of b.
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      // a * finite c: multiply the leading coefficient, keep the tail.
      std::vector<Ordinal::Term> terms = a.terms();
      terms[0].coeff *= t.coeff;
      part = Ordinal::from_terms(std::move(terms));
    } else {
      part = Ordinal::from_terms(
          {Ordinal::Term{a.leading_exponent() + t.exponent, t.coeff}});
    }
    acc = acc + part;
  }
  return acc;
}

/// Unique c with a + c = b; requires a <= b.
inline Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0;
  while (i < ta.size() && i < tb.size()) {
    auto ce = compare(ta[i].exponent, tb[i].exponent);
    if (ce == std::strong_ordering::greater)
      throw std::domain_error("left_subtract: minuend smaller than subtrahend");
    if (ce == std::strong_ordering::less) {
      std::vector<Ordinal::Term> out(tb.begin() + i, tb.end());
      return Ordinal::from_terms(std::move(out));
    }
    if (ta[i].coeff == tb[i].coeff) {
      ++i;
      continue;
    }
    if (ta[i].coeff > tb[i].coeff)
      throw std::domain_error("left_subtract: minuend smaller than subtrahend");
    std::vector<Ordinal::Term> out;
    out.push_back(Ordinal::Term{tb[i].exponent, tb[i].coeff - ta[i].coeff});
    out.insert(out.end(), tb.begin() + i + 1, tb.end());
    return Ordinal::from_terms(std::move(out));
  }
  if (i < ta.size())
    throw std::domain_error("left_subtract: minuend smaller than subtrahend");
  std::vector<Ordinal::Term> out(tb.begin() + i, tb.end());
  return Ordinal::from_terms(std::move(out));
}

/// Hessenberg (natural) sum: digit-wise addition of CNF coefficients.
inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> out;
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    if (i == ta.size()) {
      out.push_back(tb[j++]);
    } else if (j == tb.size()) {
      out.push_back(ta[i++]);
    } else {
      auto c = compare(ta[i].exponent, tb[j].exponent);
      if (c == std::strong_ordering::greater) {
        out.push_back(ta[i++]);
      } else if (c == std::strong_ordering::less) {
        out.push_back(tb[j++]);
      } else {
        out.push_back(Ordinal::Term{ta[i].exponent, ta[i].coeff + tb[j].coeff});
        ++i;
        ++j;
      }
    }
  }
  return Ordinal::from_terms(std::move(out));
}

/// Cantor-Bendixson rank: the last CNF exponent (0 for 0).
inline Ordinal cb_rank(const Ordinal& x) {
  if (x.is_zero()) return Ordinal();
  return x.last_exponent();
}

/// Predecessor of a successor ordinal.
inline Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw std::domain_error("predecessor of non-successor");
  std::vector<Ordinal::Term> terms = a.terms();
  if (terms.back().coeff == 1)
    terms.pop_back();
  else
    terms.back().coeff -= 1;
  return Ordinal::from_terms(std::move(terms));
}

struct TailDecomposition {
  Ordinal head;           // a multiple of w^tail_exponent
  Ordinal tail_exponent;  // CB rank of the input
};

/// Writes b = head + w^g with g = cb_rank(b) and head a multiple of w^g.
inline TailDecomposition tail_decompose(const Ordinal& b) {
  if (b.is_zero()) throw std::domain_error("tail_decompose of zero");
  std::vector<Ordinal::Term> terms = b.terms();
  Ordinal g = terms.back().exponent;
  if (terms.back().coeff == 1)
    terms.pop_back();
  else
    terms.back().coeff -= 1;
  return TailDecomposition{Ordinal::from_terms(std::move(terms)), std::move(g)};
}

namespace detail {
// Keeps the CNF terms of x whose exponent is >= cut.
inline Ordinal truncate_below(const Ordinal& x, const Ordinal& cut) {
  std::vector<Ordinal::Term> out;
  for (const auto& t : x.terms()) {
    if (compare(t.exponent, cut) != std::strong_ordering::less)
      out.push_back(t);
    else
      break;
  }
  return Ordinal::from_terms(std::move(out));
}
}  // namespace detail

// Milner-Rado sum a (.) b: the least g not of the form u # v with u < a,
// v < b. Computed from the sup characterization
//   a (.) b = sup { u # v + 1 : u < a, v < b }
// evaluated symbolically: with a = ha + w^da and b = hb + w^db (one tail
// term peeled off each) and d = max(da, db), the sup equals the part of
// ha # hb with exponents >= d, plus w^d. Successor operands contribute
// their maximal predecessor; limit operands contribute the limit of their
// canonical fundamental sequence. Validated independently by
// mr_sum_oracle_check.
inline Ordinal milner_rado_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("milner_rado_sum requires nonzero operands");
  TailDecomposition da = tail_decompose(a);
  TailDecomposition db = tail_decompose(b);
  const Ordinal& d =
      compare(da.tail_exponent, db.tail_exponent) == std::strong_ordering::less
          ? db.tail_exponent
          : da.tail_exponent;
  Ordinal s = detail::truncate_below(natural_sum(da.head, db.head), d);
  return s + omega_power(d);
}

/// n-th entry of the canonical fundamental sequence of a limit ordinal:
/// tail w^(d+1) becomes w^d*(n+1); tail w^L (L limit) becomes
/// w^(fundamental_sequence(L, n)). Entries strictly increase to a.
inline Ordinal fundamental_sequence(const Ordinal& a, unsigned long long n) {
  if (!a.is_limit())
    throw std::domain_error("fundamental_sequence requires a limit ordinal");
  TailDecomposition td = tail_decompose(a);
  std::vector<Ordinal::Term> terms = td.head.terms();
  if (td.tail_exponent.is_successor()) {
    Ordinal d = predecessor(td.tail_exponent);
    terms.push_back(Ordinal::Term{std::move(d), Nat(n + 1)});
  } else {
    terms.push_back(
        Ordinal::Term{fundamental_sequence(td.tail_exponent, n), Nat(1)});
  }
  return Ordinal::from_terms(std::move(terms));
}

namespace detail {
// Enumerates all digit-wise splittings x = u # v and reports whether some
// splitting has u < a and v < b.
inline bool splits_below(const Ordinal& x, const Ordinal& a, const Ordinal& b) {
  const auto& d = x.terms();
  std::vector<Nat> pick(d.size(), Nat(0));
  while (true) {
    std::vector<Ordinal::Term> ut, vt;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (pick[i] > 0) ut.push_back(Ordinal::Term{d[i].exponent, pick[i]});
      Nat rest = d[i].coeff - pick[i];
      if (rest > 0) vt.push_back(Ordinal::Term{d[i].exponent, rest});
    }
    Ordinal u = Ordinal::from_terms(std::move(ut));
    Ordinal v = Ordinal::from_terms(std::move(vt));
    if (compare(u, a) == std::strong_ordering::less &&
        compare(v, b) == std::strong_ordering::less)
      return true;
    // odometer over 0..coeff per digit
    std::size_t i = 0;
    for (; i < d.size(); ++i) {
      if (pick[i] < d[i].coeff) {
        ++pick[i];
        break;
      }
      pick[i] = 0;
    }
    if (i == d.size()) return false;
  }
}
}  // namespace detail

// Independent check that `claimed` = a (.) b, straight from the definition:
// (i) claimed itself must admit no splitting u # v with u < a, v < b, and
// (ii) every element of a strictly increasing cofinal sequence below
// `claimed` must admit one (the set of representable values is downward
// closed, an interpolation property of #, so the checked elements cover
// all of [0, claimed)). For limit `claimed` the cofinal sequence is
// sampled along the canonical fundamental sequence.
inline bool mr_sum_oracle_check(const Ordinal& a, const Ordinal& b,
                                const Ordinal& claimed,
                                unsigned cofinal_samples = 24) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("mr_sum_oracle_check requires nonzero operands");
  if (detail::splits_below(claimed, a, b)) return false;
  if (claimed.is_zero()) return true;
  if (claimed.is_successor())
    return detail::splits_below(predecessor(claimed), a, b);
  for (unsigned n = 0; n < cofinal_samples; ++n) {
    if (!detail::splits_below(fundamental_sequence(claimed, n), a, b))
      return false;
  }
  return true;
}

}  // namespace ordram
