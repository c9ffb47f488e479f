#pragma once

#include "ordram/ordinal.hpp"
#include "ordram/parse.hpp"

#include <random>
#include <vector>

namespace ordram::testing {

// Random ordinals with hereditary exponents, for property checks.
// Deterministic for a fixed engine state.
inline Ordinal random_ordinal(std::mt19937_64& rng, int depth = 2,
                              int max_terms = 3, unsigned max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> coeff(1, max_coeff);
  int n = nterms(rng);
  std::vector<Ordinal> exps;
  for (int i = 0; i < n; ++i) {
    if (depth > 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
      exps.push_back(random_ordinal(rng, depth - 1, 2, 3));
    else
      exps.push_back(Ordinal(std::uniform_int_distribution<unsigned>(0, 4)(rng)));
  }
  Ordinal acc;
  for (const auto& e : exps) acc = natural_sum(acc, omega_power(e) * Ordinal(coeff(rng)));
  return acc;
}

inline Ordinal random_nonzero_ordinal(std::mt19937_64& rng, int depth = 2,
                                      int max_terms = 3, unsigned max_coeff = 5) {
  for (;;) {
    Ordinal x = random_ordinal(rng, depth, max_terms, max_coeff);
    if (!x.is_zero()) return x;
  }
}

inline Ordinal O(const char* text) { return parse_ordinal(text); }

}  // namespace ordram::testing
