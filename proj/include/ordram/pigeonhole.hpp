#pragma once

// Closed pigeonhole numbers P^cl for finite lists of countable targets,
// plus registries of tabulated topological and classical pigeonhole values.
//
// P^cl is computed by structural recursion over the target list:
//   0. a target 0 short-circuits to 0; targets equal to 1 are dropped
//      (result 1 when nothing remains); a singleton is its own value.
//   1. results are invariant under permutation of the targets.
//   2. all targets w^b_i + 1 (b_i >= 1):  w^(b_1 # ... # b_k) + 1.
//   3. all targets powers of w:           w^(b_1 (.) ... (.) b_k).
//   4. some target a power of w: round every target a_i up to the least
//      w^b_i >= a_i, then apply 3.
//   5. otherwise write a_i = t_i + g_i with t_i = 1 for finite a_i and
//      t_i = w^b_i + 1 (b_i the leading exponent) for infinite a_i; with
//      Q_i the value of the list with a_i replaced by g_i, the result is
//      P^cl(t_1,...,t_k) + max Q_i.
// The clause-5 recursion strictly shrinks one target per branch, so it
// terminates; a depth guard asserts as much.

#include "ordram/ordinal.hpp"
#include "ordram/topology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace ordram {

struct UnsupportedCase : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline bool is_power_of_omega(const Ordinal& x) {
  return x.terms().size() == 1 && x.leading_coeff() == 1 &&
         !x.leading_exponent().is_zero();
}

// w^b + 1 with b >= 1
inline bool is_omega_power_plus_one(const Ordinal& x) {
  const auto& ts = x.terms();
  return ts.size() == 2 && ts[0].coeff == 1 && !ts[0].exponent.is_zero() &&
         ts[1].exponent.is_zero() && ts[1].coeff == 1;
}

// least b with x <= w^b: the leading exponent for powers of w, otherwise
// the leading exponent plus one
inline Ordinal ceil_log_omega(const Ordinal& x) {
  if (is_power_of_omega(x)) return x.leading_exponent();
  return x.leading_exponent() + Ordinal(1);
}

class PclCalculator {
 public:
  Ordinal compute(std::vector<Ordinal> targets) {
    return compute_memo(std::move(targets), 0);
  }

 private:
  static constexpr int kMaxDepth = 4096;

  Ordinal compute_memo(std::vector<Ordinal> targets, int depth) {
    for (const auto& t : targets)
      if (t.is_zero()) return Ordinal();
    std::erase_if(targets, [](const Ordinal& t) { return t == Ordinal(1); });
    if (targets.empty()) return Ordinal(1);
    if (targets.size() == 1) return targets[0];
    std::sort(targets.begin(), targets.end(),
              [](const Ordinal& a, const Ordinal& b) { return b < a; });
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(targets);
      if (it != memo_.end()) return it->second;
    }
    Ordinal value = compute_normalized(targets, depth);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(targets), value);
    return value;
  }

  Ordinal compute_normalized(const std::vector<Ordinal>& ts, int depth) {
    if (depth > kMaxDepth)
      throw std::logic_error("pcl recursion failed to terminate");

    bool all_power_plus_one = true, all_power = true, any_power = false;
    for (const auto& t : ts) {
      all_power_plus_one = all_power_plus_one && is_omega_power_plus_one(t);
      bool p = is_power_of_omega(t);
      all_power = all_power && p;
      any_power = any_power || p;
    }

    if (all_power_plus_one) {
      Ordinal e;
      for (const auto& t : ts) e = natural_sum(e, t.leading_exponent());
      return omega_power(e) + Ordinal(1);
    }
    if (all_power) {
      Ordinal e = ts[0].leading_exponent();
      for (std::size_t i = 1; i < ts.size(); ++i)
        e = milner_rado_sum(e, ts[i].leading_exponent());
      return omega_power(e);
    }
    if (any_power) {
      Ordinal e = ceil_log_omega(ts[0]);
      for (std::size_t i = 1; i < ts.size(); ++i)
        e = milner_rado_sum(e, ceil_log_omega(ts[i]));
      return omega_power(e);
    }

    // clause 5
    std::vector<Ordinal> heads(ts.size());
    std::vector<Ordinal> gammas(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i].is_finite()) {
        heads[i] = Ordinal(1);
        gammas[i] = left_subtract(Ordinal(1), ts[i]);
      } else {
        heads[i] = omega_power(ts[i].leading_exponent()) + Ordinal(1);
        gammas[i] = left_subtract(heads[i], ts[i]);
      }
    }
    Ordinal base = compute_memo(heads, depth + 1);
    Ordinal best;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::vector<Ordinal> sub = ts;
      sub[i] = gammas[i];
      Ordinal q = compute_memo(std::move(sub), depth + 1);
      if (q > best) best = q;
    }
    return base + best;
  }

  std::mutex mu_;
  std::map<std::vector<Ordinal>, Ordinal> memo_;
};

inline PclCalculator& pcl_calculator() {
  static PclCalculator calc;
  return calc;
}

}  // namespace detail

/// Exact closed pigeonhole number P^cl(targets).
inline Ordinal pcl_number(std::vector<Ordinal> targets) {
  if (targets.empty())
    throw UnsupportedCase("pcl_number requires at least one target");
  return detail::pcl_calculator().compute(std::move(targets));
}

inline Ordinal pcl_number_repeated(const Ordinal& target, unsigned count) {
  return pcl_number(std::vector<Ordinal>(count, target));
}

// Tabulated topological pigeonhole values. Targets are first replaced by
// their least homeomorphic representatives (P^top only sees targets up to
// homeomorphism); a value is returned when the normalized list matches a
// tabulated shape:
//   - every representative order-reinforcing: P^top = P^cl;
//   - a pair (w*m, w*m) with m >= 2: w^2*2 for m = 2, w^2*(2m-3)+1 for m > 2.
// Everything else is absent rather than guessed.
inline std::optional<Ordinal> ptop_registry(std::vector<Ordinal> targets) {
  for (const auto& t : targets)
    if (t.is_zero()) return Ordinal();
  std::erase_if(targets, [](const Ordinal& t) { return t == Ordinal(1); });
  if (targets.empty()) return Ordinal(1);
  for (auto& t : targets) t = homeo_min_rep(t);
  if (targets.size() == 1) return targets[0];

  if (std::all_of(targets.begin(), targets.end(), order_reinforcing))
    return pcl_number(std::move(targets));

  if (targets.size() == 2 && targets[0] == targets[1]) {
    const Ordinal& t = targets[0];
    if (t.terms().size() == 1 && t.leading_exponent() == Ordinal(1) &&
        t.leading_coeff() >= 2) {
      Nat m = t.leading_coeff();
      if (m == 2) return omega_power(Ordinal(2)) * Ordinal(2);
      return omega_power(Ordinal(2)) * Ordinal(2 * m - 3) + Ordinal(1);
    }
  }
  return std::nullopt;
}

// Tabulated classical pigeonhole values:
//   - finite targets: sum of (m_i - 1) plus one;
//   - k copies of an indecomposable (power of w): itself;
//   - k copies of w+1: w*k+1;
//   - k copies of w+2: w^k + w^(k-1) + ... + w + 2;
//   - a pair (w+n, w+n), n >= 2: w^2 + w*(n-1) + n.
inline std::optional<Ordinal> classical_p_registry(std::vector<Ordinal> targets) {
  for (const auto& t : targets)
    if (t.is_zero()) return Ordinal();
  std::erase_if(targets, [](const Ordinal& t) { return t == Ordinal(1); });
  if (targets.empty()) return Ordinal(1);
  if (targets.size() == 1) return targets[0];

  if (std::all_of(targets.begin(), targets.end(),
                  [](const Ordinal& t) { return t.is_finite(); })) {
    Nat total = 1;
    for (const auto& t : targets) total += t.as_nat() - 1;
    return Ordinal(total);
  }

  bool uniform = std::all_of(targets.begin(), targets.end(),
                             [&](const Ordinal& t) { return t == targets[0]; });
  if (uniform) {
    const Ordinal& t = targets[0];
    unsigned long long k = targets.size();
    if (detail::is_power_of_omega(t)) return t;
    if (t == Ordinal::omega() + Ordinal(1))
      return Ordinal::omega() * Ordinal(k) + Ordinal(1);
    if (t == Ordinal::omega() + Ordinal(2)) {
      Ordinal acc(2);
      for (unsigned long long j = 1; j <= k; ++j)
        acc = omega_power(Ordinal(j)) + acc;
      return acc;
    }
    if (k == 2 && t.terms().size() == 2 &&
        t.leading_exponent() == Ordinal(1) && t.leading_coeff() == 1 &&
        t.terms()[1].exponent.is_zero()) {
      Nat n = t.terms()[1].coeff;  // t = w + n, n >= 2 here
      return omega_power(Ordinal(2)) + Ordinal::omega() * Ordinal(n - 1) +
             Ordinal(n);
    }
  }
  return std::nullopt;
}

}  // namespace ordram
