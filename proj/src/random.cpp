#include "vieta/random.hpp"

#include <algorithm>
#include <set>

#include "vieta/errors.hpp"

namespace vieta {

std::int64_t Random::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

std::int64_t Random::nonzero(std::int64_t lo, std::int64_t hi) {
  while (true) {
    std::int64_t v = uniform(lo, hi);
    if (v != 0) return v;
  }
}

Rational Random::nonzero_rational(std::int64_t num, std::int64_t den) {
  return Rational(Integer(nonzero(-num, num)), Integer(uniform(1, den)));
}

LaurentPolynomial random_univariate(Random& rng, std::int64_t max_length, std::int64_t c) {
  const std::int64_t length = rng.uniform(1, max_length);
  const std::int64_t low = rng.uniform(-3, 3);
  LaurentPolynomial f(1);
  f.add_term({low}, Rational(rng.nonzero(-c, c)));
  f.add_term({low + length}, Rational(rng.nonzero(-c, c)));
  for (std::int64_t e = low + 1; e < low + length; ++e) {
    f.add_term({e}, Rational(rng.uniform(-c, c)));
  }
  return f;
}

LaurentPolynomial random_laurent(Random& rng, std::size_t n, std::size_t terms, std::int64_t lo,
                                 std::int64_t hi) {
  LaurentPolynomial f(n);
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(terms)));
  while (f.is_zero()) {
    for (std::size_t t = 0; t < k; ++t) {
      Exponent e(n);
      for (auto& x : e) x = rng.uniform(lo, hi);
      f.add_term(e, rng.nonzero_rational(9, 4));
    }
  }
  return f;
}

Monomial random_monomial(Random& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  Exponent e(n);
  for (auto& x : e) x = rng.uniform(lo, hi);
  return Monomial(rng.nonzero_rational(9, 4), e);
}

std::vector<LaurentPolynomial> random_developed_system(Random& rng, std::size_t n,
                                                       std::size_t max_points, std::int64_t box,
                                                       std::int64_t c) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<LaurentPolynomial> system;
    std::vector<Polytope> polys;
    std::int64_t lattice_points = 1;
    for (std::size_t i = 0; i < n && lattice_points < 1000; ++i) lattice_points *= box + 1;
    const std::int64_t most = std::min<std::int64_t>(static_cast<std::int64_t>(max_points), lattice_points);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(rng.uniform(2, most));
      std::set<Exponent> support;
      while (support.size() < k) {
        Exponent e(n);
        for (auto& x : e) x = rng.uniform(0, box);
        support.insert(e);
      }
      LaurentPolynomial f(n);
      for (const auto& e : support) f.add_term(e, Rational(rng.nonzero(-c, c)));
      polys.push_back(newton_polytope(f));
      system.push_back(std::move(f));
    }
    if (is_developed(polys)) return system;
  }
  throw ConsistencyError("no developed system found after many attempts");
}

std::vector<LaurentPolynomial> BinomialInstance::system() const {
  std::vector<LaurentPolynomial> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPolynomial f(n);
    f.add_term(a[i], Rational(1));
    f.add_term(Exponent(n, 0), -d[i]);
    out.push_back(std::move(f));
  }
  return out;
}

BinomialInstance random_binomial(Random& rng, std::size_t n, std::int64_t entry_bound) {
  BinomialInstance inst;
  do {
    inst.a.assign(n, std::vector<std::int64_t>(n));
    for (auto& row : inst.a) {
      for (auto& x : row) x = rng.uniform(-entry_bound, entry_bound);
    }
  } while (determinant(inst.a) == 0);
  for (std::size_t i = 0; i < n; ++i) inst.d.push_back(rng.nonzero_rational(9, 5));
  return inst;
}

IntMatrix random_unimodular(Random& rng, std::size_t n, int steps) {
  IntMatrix q(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) q[i][i] = 1;
  if (n == 1) {
    if (rng.coin()) q[0][0] = -1;
    return q;
  }
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    switch (rng.uniform(0, 2)) {
    case 0: { // row_i += k row_j
      const std::int64_t k = rng.nonzero(-2, 2);
      for (std::size_t c = 0; c < n; ++c) q[i][c] += k * q[j][c];
      break;
    }
    case 1:
      std::swap(q[i], q[j]);
      break;
    default:
      for (auto& x : q[i]) x = -x;
      break;
    }
  }
  return q;
}

SymbolInput random_symbol_input(Random& rng, std::size_t n, std::int64_t exp_bound) {
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i <= n; ++i) ms.push_back(random_monomial(rng, n, -exp_bound, exp_bound));
  return SymbolInput(std::move(ms));
}

TruncatedSeries random_unit_series(Random& rng, std::size_t n, std::int64_t bound,
                                   std::size_t terms) {
  WeightFunctional w{Exponent(n, 1), 1};
  TruncatedSeries s(n, w, bound);
  s.add_term(Exponent(n, 0), Rational(1));
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    const std::int64_t total = rng.uniform(1, std::min<std::int64_t>(bound, 3));
    for (std::int64_t k = 0; k < total; ++k) ++e[rng.index(n)];
    s.add_term(e, rng.nonzero_rational(5, 3));
  }
  return s;
}

Polytope random_polytope(Random& rng, std::size_t n, std::size_t points, std::int64_t box) {
  while (true) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < points; ++i) {
      Point p(n);
      for (auto& x : p) x = Rational(rng.uniform(0, box));
      pts.push_back(std::move(p));
    }
    Polytope p = convex_hull(std::move(pts));
    if (p.is_full_dimensional()) return p;
  }
}

} // namespace vieta
