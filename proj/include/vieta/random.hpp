#pragma once

// Seeded generators for test and verification instances.

#include <cstdint>
#include <random>
#include <vector>

#include "vieta/laurent.hpp"
#include "vieta/polytope.hpp"
#include "vieta/residue.hpp"
#include "vieta/symbol.hpp"

namespace vieta {

class Random {
public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::size_t index(std::size_t count) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(count) - 1)); }

  // p/q with p in [-num, num] \ {0} and q in [1, den].
  Rational nonzero_rational(std::int64_t num, std::int64_t den);

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

// One-variable Laurent polynomial with lattice length in [1, max_length],
// lowest exponent in [-3, 3], nonzero endpoint coefficients in [-c, c] and
// interior coefficients in [-c, c].
LaurentPolynomial random_univariate(Random& rng, std::int64_t max_length, std::int64_t c);

// Up to `terms` terms with exponents in [lo, hi]^n and rational coefficients.
LaurentPolynomial random_laurent(Random& rng, std::size_t n, std::size_t terms, std::int64_t lo,
                                 std::int64_t hi);

Monomial random_monomial(Random& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

// n polynomials, each supported on 2..max_points lattice points of [0, box]^n
// with integer coefficients in [-c, c] \ {0}, resampled until the Newton
// polytopes are developed.
std::vector<LaurentPolynomial> random_developed_system(Random& rng, std::size_t n,
                                                       std::size_t max_points, std::int64_t box,
                                                       std::int64_t c);

struct BinomialInstance {
  IntMatrix a;               // rows a_i, det != 0
  std::vector<Rational> d;   // t^{a_i} = d_i
  std::vector<LaurentPolynomial> system() const;
};

BinomialInstance random_binomial(Random& rng, std::size_t n, std::int64_t entry_bound);

// Product of random elementary operations; det is +1 or -1.
IntMatrix random_unimodular(Random& rng, std::size_t n, int steps = 6);

SymbolInput random_symbol_input(Random& rng, std::size_t n, std::int64_t exp_bound);

// 1 + random terms of positive weight up to `bound` under the weight
// (1, ..., 1) restricted to the positive orthant.
TruncatedSeries random_unit_series(Random& rng, std::size_t n, std::int64_t bound,
                                   std::size_t terms);

// Full-dimensional lattice polytope in [0, box]^n from random points.
Polytope random_polytope(Random& rng, std::size_t n, std::size_t points, std::int64_t box);

} // namespace vieta
