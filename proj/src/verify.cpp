#include "vieta/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "vieta/errors.hpp"
#include "vieta/flags.hpp"
#include "vieta/formulas.hpp"
#include "vieta/oracles.hpp"
#include "vieta/random.hpp"
#include "vieta/residue.hpp"
#include "vieta/symbol.hpp"

namespace vieta {

bool SuiteResult::passed() const {
  return cases > 0 && failures == 0 && (time_limit <= 0 || seconds < time_limit);
}

namespace {

// Records the first failure; `check` never throws.
class Tally {
public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    if (ok) return;
    ++r_.failures;
    if (r_.message.empty()) r_.message = what;
  }

  // Runs one case; any exception is a failure.
  void run_case(std::size_t index, const std::function<void()>& body) {
    ++r_.cases;
    try {
      body();
    } catch (const std::exception& e) {
      check(false, "case " + std::to_string(index) + ": " + e.what());
    }
  }

private:
  SuiteResult& r_;
};

std::string describe(const std::vector<LaurentPolynomial>& system) {
  std::string out = "[";
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i) out += ", ";
    out += to_string(system[i]);
  }
  return out + "]";
}

std::string case_tag(std::size_t k, const std::vector<LaurentPolynomial>& system) {
  return "case " + std::to_string(k) + " " + describe(system);
}

void square_system(SuiteResult& r, const VerifyOptions& opts) {
  Tally t(r);
  t.run_case(0, [&] {
    LaurentPolynomial f1(2), f2(2);
    f1.add_term({1, 0}, 1);
    f1.add_term({0, 0}, -2);
    f2.add_term({0, 1}, 1);
    f2.add_term({0, 0}, -3);
    SystemInstance sys({f1, f2}, opts.exec);
    const Monomial f0(Rational(1), {1, 1});

    const std::vector<Exponent> at = {{1, 1}, {0, 0}, {1, 0}, {0, 1}};
    const std::vector<long> c = {1, 1, -1, -1};
    const std::vector<Rational> symbols = {Rational(1), Rational(1), Rational(-1, 3),
                                           Rational(-1, 2)};
    for (std::size_t k = 0; k < at.size(); ++k) {
      const std::size_t v = sys.vertex_index(at[k]);
      t.check(sys.coefficients()[v] == c[k], "c at vertex " + std::to_string(k));
      t.check(vertex_symbol(f0, sys.system(), sys.minkowski(), v) == symbols[k],
              "vertex symbol at vertex " + std::to_string(k));
    }
    const Rational prod = product_over_roots(f0, sys, opts.exec);
    t.check(prod == 6, "product_over_roots = " + to_string(prod));
    LaurentPolynomial t1(2);
    t1.add_term({1, 0}, 1);
    const Rational sum = sum_over_roots(t1, sys, opts.exec);
    t.check(sum == 2, "sum_over_roots(t1) = " + to_string(sum));
    const Rational res = log_form_residue(LaurentPolynomial::constant(2, 1), sys.system(), {1, 1});
    t.check(res == 1, "log_form_residue at (1,1) = " + to_string(res));

    // The same numbers from the binomial closed form.
    const IntMatrix a = {{1, 0}, {0, 1}};
    const std::vector<Rational> d = {Rational(2), Rational(3)};
    t.check(binomial_aggregate(a, d, f0, Aggregate::product) == prod, "binomial oracle product");
    t.check(binomial_aggregate(a, d, Monomial(Rational(1), {1, 0}), Aggregate::sum) == sum,
            "binomial oracle sum");
  });
}

void univariate_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x2000);
  for (std::size_t k = 0; k < count; ++k) {
    const LaurentPolynomial f1 = random_univariate(rng, 8, 9);
    const Monomial m = random_monomial(rng, 1, -3, 3);
    const LaurentPolynomial g = random_laurent(rng, 1, 5, -3, 3);
    t.run_case(k, [&] {
      SystemInstance sys({f1}, opts.exec);
      const std::string tag = case_tag(k, {f1});
      t.check(product_over_roots(m, sys, opts.exec) ==
                  univariate_aggregate(f1, LaurentPolynomial(m), Aggregate::product),
              tag + ": product");
      t.check(sum_over_roots(g, sys, opts.exec) == univariate_aggregate(f1, g, Aggregate::sum),
              tag + ": sum of " + to_string(g));
    });
  }
}

void binomial_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x3000);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = rng.coin() ? 3 : 2;
    const BinomialInstance inst = random_binomial(rng, n, 3);
    const Monomial m = random_monomial(rng, n, -3, 3);
    t.run_case(k, [&] {
      SystemInstance sys(inst.system(), opts.exec);
      const std::string tag = case_tag(k, sys.system());
      t.check(product_over_roots(m, sys, opts.exec) ==
                  binomial_aggregate(inst.a, inst.d, m, Aggregate::product),
              tag + ": product");
      t.check(sum_over_roots(LaurentPolynomial(m), sys, opts.exec) ==
                  binomial_aggregate(inst.a, inst.d, m, Aggregate::sum),
              tag + ": sum");
    });
  }
}

void mixed_volume_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x4000);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = rng.coin() ? 3 : 2;
    const auto system = random_developed_system(rng, n, 5, 3, 9);
    t.run_case(k, [&] {
      SystemInstance sys(system, opts.exec);
      const Integer count_roots = bernstein_number(sys, opts.exec);
      t.check(count_roots >= 0, case_tag(k, system) + ": negative root count");
    });
  }
}

SymbolInput replace(const SymbolInput& inp, std::size_t i, const Monomial& m) {
  auto ms = inp.monomials;
  ms[i] = m;
  return SymbolInput(std::move(ms));
}

void symbol_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x5000);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const SymbolInput inp = random_symbol_input(rng, n, 5);
    const std::size_t i = rng.index(n + 1);
    std::size_t j = rng.index(n);
    if (j >= i) ++j;
    const Monomial other = random_monomial(rng, n, -5, 5);
    const IntMatrix q = random_unimodular(rng, n);
    std::vector<Rational> lambda;
    for (std::size_t c = 0; c < n; ++c) lambda.push_back(rng.nonzero_rational(7, 5));
    t.run_case(k, [&] {
      const std::string tag = "case " + std::to_string(k);
      const FactoredRational s = factored_symbol(inp);

      const Monomial& mi = inp.monomials[i];
      Exponent sum_exp(n);
      for (std::size_t c = 0; c < n; ++c) sum_exp[c] = mi.exp[c] + other.exp[c];
      const Monomial prod(mi.coeff * other.coeff, sum_exp);
      t.check(same_value(factored_symbol(replace(inp, i, prod)),
                         s * factored_symbol(replace(inp, i, other))),
              tag + ": multiplicativity");

      auto swapped = inp.monomials;
      std::swap(swapped[i], swapped[j]);
      t.check(same_value(factored_symbol(SymbolInput(swapped)), s.inverse()),
              tag + ": skew-symmetry");

      std::vector<Monomial> subst;
      for (const auto& m : inp.monomials) {
        subst.push_back(LaurentPolynomial(m).substitute(q).as_monomial());
      }
      t.check(same_value(factored_symbol(SymbolInput(subst)), s.pow(determinant(q))),
              tag + ": monomial substitution");

      std::vector<Monomial> moved;
      for (const auto& m : inp.monomials) {
        Rational c = m.coeff;
        for (std::size_t v = 0; v < n; ++v) c *= rational_pow(lambda[v], Integer(m.exp[v]));
        moved.emplace_back(c, m.exp);
      }
      t.check(same_value(factored_symbol(SymbolInput(moved)), s), tag + ": translation");
    });
  }
}

LaurentPolynomial random_nonmonomial(Random& rng, std::size_t n) {
  while (true) {
    LaurentPolynomial f = random_laurent(rng, n, 4, -2, 2);
    if (f.size() >= 2) return f;
  }
}

void residue_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x6000);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const LaurentPolynomial f = random_nonmonomial(rng, n);
    const Polytope p = newton_polytope(f);
    const Exponent vertex = to_exponent(p.vertices()[rng.index(p.vertices().size())]);
    const LaurentPolynomial g1 = random_laurent(rng, n, 4, -2, 2);
    const LaurentPolynomial g2 = random_laurent(rng, n, 4, -2, 2);

    std::vector<Monomial> leads;
    IntMatrix a;
    for (std::size_t i = 0; i < n; ++i) {
      leads.push_back(random_monomial(rng, n, -3, 3));
      a.push_back(leads.back().exp);
    }
    std::vector<std::int64_t> m(n, 1);
    // Some m_i != 1; the constant term then sits at weight w(sum a_i (m_i - 1))
    // under w = (1, ..., 1), which must stay within the truncation.
    std::vector<std::int64_t> m_exact(n);
    std::int64_t needed = 0;
    do {
      for (auto& x : m_exact) x = rng.uniform(-1, 3);
      needed = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) needed += a[i][c] * (m_exact[i] - 1);
      }
    } while (m_exact == m || needed > 12);
    const std::int64_t bound = std::max<std::int64_t>(8, needed);
    std::vector<LogUnit> units;
    for (std::size_t i = 0; i < n; ++i) {
      units.push_back({leads[i], random_unit_series(rng, n, 2 * bound, 3)});
    }

    t.run_case(k, [&] {
      const std::string tag = "case " + std::to_string(k) + " f = " + to_string(f);
      const Rational r1 = residue_at_vertex(g1, f, vertex);
      const std::int64_t b = residue_bound(g1, f, vertex);
      t.check(residue_at_vertex_truncated(g1, f, vertex, b) == r1, tag + ": truncated route");
      t.check(residue_at_vertex_truncated(g1, f, vertex, 2 * b) == r1, tag + ": doubled bound");

      const Rational r2 = residue_at_vertex(g2, f, vertex);
      t.check(residue_at_vertex(g1 + g2, f, vertex) == r1 + r2, tag + ": linearity");

      const LaurentPolynomial f2 = f * f;
      Exponent twice(vertex);
      for (auto& x : twice) x *= 2;
      for (std::size_t i = 0; i < n; ++i) {
        const LaurentPolynomial dg = g1.log_derivative(i);
        t.check(dg.coefficient(Exponent(n, 0)) == 0, tag + ": constant term of a derivative");
        // t_i d/dt_i (g / f) = (f t_i dg - g t_i df) / f^2 has no constant term.
        const LaurentPolynomial num = f * dg - g1 * f.log_derivative(i);
        t.check(residue_at_vertex(num, f2, twice) == 0, tag + ": derivative of a quotient");
      }

      t.check(wedge_log_residue(units, m, bound) == Rational(determinant(a)), tag + ": det(a)");
      t.check(wedge_log_residue(units, m_exact, bound) == 0, tag + ": exact wedge");
    });
  }
}

void degree_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x7000);
  for (std::size_t k = 0; k < count; ++k) {
    const std::string tag = "case " + std::to_string(k);
    const std::size_t kind = k % 4;
    if (kind == 3) {
      const std::size_t n = rng.coin() ? 3 : 2;
      const auto system = random_developed_system(rng, n, 5, 3, 9);
      t.run_case(k, [&] {
        std::vector<Polytope> polys;
        for (const auto& f : system) polys.push_back(newton_polytope(f));
        MinkowskiSystem ms(std::move(polys), opts.exec);
        const std::size_t v = rng.index(ms.total().vertices().size());
        const long c = combinatorial_coefficient(ms, v);
        const FaceMap psi = pyramid_covering_map(ms, v);
        const long h = degree_by_homology(psi);
        t.check(h == c, case_tag(k, system) + ": c(A) = " + std::to_string(c) +
                            " but homology degree " + std::to_string(h));
        const long f = degree_by_flags(psi, simplex_reference_flag(psi.target), opts.exec);
        t.check(f == h, case_tag(k, system) + ": flag degree of the pyramid map");
      });
      continue;
    }
    const std::size_t dim = rng.coin() ? 3 : 2;
    Polytope p = kind == 2 ? Polytope{} : random_polytope(rng, dim, 4 + rng.index(4), 3);
    if (kind == 2) {
      // A box, for the antipodal map.
      std::vector<Point> corners;
      std::vector<std::int64_t> side(dim);
      for (auto& s : side) s = rng.uniform(1, 3);
      for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        Point c(dim);
        for (std::size_t i = 0; i < dim; ++i) c[i] = (mask >> i) & 1U ? Rational(side[i]) : Rational(0);
        corners.push_back(std::move(c));
      }
      p = convex_hull(std::move(corners), opts.exec);
    }
    const std::size_t cell = rng.index(p.faces().size() - 1);
    t.run_case(k, [&] {
      PolyhedralComplex x(p);
      FaceMap psi = kind == 0 ? identity_map(x) : kind == 1 ? collapse_map(x, cell) : antipodal_map(x);
      const long h = degree_by_homology(psi);
      for (const Flag& ref : psi.target.flags()) {
        const long f = degree_by_flags(psi, ref, opts.exec);
        if (f != h) {
          t.check(false, tag + ": flag degree " + std::to_string(f) + " vs homology " +
                             std::to_string(h));
          break;
        }
      }
      const long expected = kind == 0 ? 1 : kind == 1 ? 0 : (dim % 2 == 0 ? 1 : -1);
      t.check(h == expected, tag + ": unexpected degree " + std::to_string(h));
    });
  }
}

bool close(double numeric, const Rational& exact, double tol) {
  const double e = exact.convert_to<double>();
  return std::abs(numeric - e) <= tol * std::abs(e);
}

void numeric_suite(SuiteResult& r, const VerifyOptions& opts, std::size_t count) {
  Tally t(r);
  Random rng(opts.seed ^ 0x8000);
  std::size_t k = 0;
  while (k < count) {
    const auto system = random_developed_system(rng, 2, 5, 3, 50);
    const Monomial m = random_monomial(rng, 2, -2, 2);
    const LaurentPolynomial g = random_laurent(rng, 2, 3, -2, 2);
    double num_prod = 0, num_sum = 0;
    try {
      num_prod = numeric_bivariate_aggregate(system, LaurentPolynomial(m), Aggregate::product);
      num_sum = numeric_bivariate_aggregate(system, g, Aggregate::sum);
    } catch (const IllConditioned&) {
      if (++r.resampled > 50 * count) {
        t.check(false, "too many ill-conditioned instances");
        return;
      }
      continue;
    }
    t.run_case(k, [&] {
      SystemInstance sys(system, opts.exec);
      const std::string tag = case_tag(k, system);
      const Rational prod = product_over_roots(m, sys, opts.exec);
      t.check(close(num_prod, prod, 1e-6),
              tag + ": product " + to_string(prod) + " vs " + std::to_string(num_prod));
      const Rational sum = sum_over_roots(g, sys, opts.exec);
      t.check(close(num_sum, sum, 1e-6),
              tag + ": sum " + to_string(sum) + " vs " + std::to_string(num_sum));
    });
    ++k;
  }
}

struct SuiteDef {
  const char* name;
  std::size_t default_cases;
  double time_limit;
  void (*body)(SuiteResult&, const VerifyOptions&, std::size_t);
};

const SuiteDef kSuites[kSuiteCount] = {
    {"square system", 1, 1.0, [](SuiteResult& r, const VerifyOptions& o, std::size_t) {
       square_system(r, o);
     }},
    {"univariate Vieta", 200, 10.0, univariate_suite},
    {"binomial systems", 100, 30.0, binomial_suite},
    {"mixed volume", 50, 60.0, mixed_volume_suite},
    {"symbol properties", 1000, 0.0, symbol_suite},
    {"residue properties", 200, 0.0, residue_suite},
    {"map degrees", 50, 0.0, degree_suite},
    {"numeric bivariate", 20, 60.0, numeric_suite},
};

} // namespace

SuiteResult run_suite(int id, const VerifyOptions& opts) {
  if (id < 1 || id > kSuiteCount) throw PreconditionError("no suite " + std::to_string(id));
  const SuiteDef& def = kSuites[id - 1];
  SuiteResult r;
  r.id = id;
  r.name = def.name;
  r.time_limit = opts.cases ? 0.0 : def.time_limit; // limits apply to the full counts
  const auto start = std::chrono::steady_clock::now();
  try {
    def.body(r, opts, opts.cases.value_or(def.default_cases));
  } catch (const std::exception& e) {
    ++r.failures;
    if (r.message.empty()) r.message = std::string("instance generation: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  for (int id = 1; id <= kSuiteCount; ++id) out.push_back(run_suite(id, opts));
  return out;
}

} // namespace vieta
