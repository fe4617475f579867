#include <gtest/gtest.h>

#include "helpers.hpp"
#include "vieta/errors.hpp"
#include "vieta/formulas.hpp"
#include "vieta/oracles.hpp"
#include "vieta/random.hpp"

using namespace vieta;
using vieta::test::P;
using vieta::test::system_of;

TEST(Formulas, SquareSystem) {
  const SystemInstance sys(system_of(2, {"t1-2", "t2-3"}));
  EXPECT_EQ(product_over_roots(Monomial(Rational(1), {1, 1}), sys), 6);
  EXPECT_EQ(sum_over_roots(P("t1", 2), sys), 2);
  EXPECT_EQ(sum_over_roots(P("1", 2), sys), 1);
  EXPECT_EQ(bernstein_number(sys), 1);
  // Root (2, 3): any f0 evaluates there.
  const LaurentPolynomial g = P("t1^-2*t2 + 5*t2^3 - 1/7", 2);
  const std::vector<Rational> root = {Rational(2), Rational(3)};
  EXPECT_EQ(sum_over_roots(g, sys), laurent_eval<Rational>(g, root));
}

TEST(Formulas, QuadraticInOneVariable) {
  const SystemInstance sys(system_of(1, {"t1^2-5*t1+6"}));
  EXPECT_EQ(product_over_roots(P("t1", 1), sys), 6);
  EXPECT_EQ(sum_over_roots(P("t1", 1), sys), 5);
  EXPECT_EQ(sum_over_roots(P("t1^2", 1), sys), 13);
  EXPECT_EQ(sum_over_roots(P("t1^-1", 1), sys), Rational(5, 6));
  EXPECT_EQ(sys.coefficients(), (std::vector<long>{1, -1}));
}

TEST(Formulas, ConstantF0GivesPowerOfRootCount) {
  Random rng(61);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const SystemInstance sys(random_developed_system(rng, n, 5, 3, 9));
    const Integer count = bernstein_number(sys);
    const Rational c(-3, 2);
    EXPECT_EQ(product_over_roots(Monomial(c, Exponent(n, 0)), sys), rational_pow(c, count));
  }
}

TEST(Formulas, BernsteinExamples) {
  // Two generic lines share a Newton triangle, so they are not a developed
  // pair; their root count is only available from the mixed volume.
  const auto lines = system_of(2, {"1 + 2*t1 - 3*t2", "5 - t1 + 7*t2"});
  EXPECT_THROW(SystemInstance{lines}, PreconditionError);
  EXPECT_EQ(mixed_volume_ie(std::vector{newton_polytope(lines[0]), newton_polytope(lines[1])}), 1);

  // [0, 2e1] against a triangle of height 2 with no horizontal edge: 2 * 2.
  const SystemInstance mixed(system_of(2, {"1 + t1 + 3*t1^2", "2 + t1*t2 - t2^2"}));
  EXPECT_EQ(bernstein_number(mixed), 4);
  EXPECT_EQ(bernstein_number(mixed), mixed_volume_ie(mixed.minkowski().summands()));
}

TEST(Formulas, Preconditions) {
  EXPECT_THROW(SystemInstance(system_of(2, {"t1+t2+1", "t1+t2+3"})), PreconditionError);
  EXPECT_THROW(SystemInstance(system_of(2, {"t1", "t2-3"})), PreconditionError);
  EXPECT_THROW(SystemInstance(system_of(2, {"t1-2"})), DimensionError);
  const SystemInstance sys(system_of(2, {"t1-2", "t2-3"}));
  EXPECT_THROW(product_over_roots(P("t1+t2", 2), sys), PreconditionError);
  EXPECT_THROW(sys.vertex_index({2, 2}), PreconditionError);
}

TEST(Formulas, MultiplicativeAndLinearInF0) {
  Random rng(62);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const SystemInstance sys(random_developed_system(rng, n, 4, 2, 9));
    const Monomial f = random_monomial(rng, n, -2, 2);
    const Monomial g = random_monomial(rng, n, -2, 2);
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = f.exp[i] + g.exp[i];
    EXPECT_EQ(product_over_roots(Monomial(f.coeff * g.coeff, e), sys),
              product_over_roots(f, sys) * product_over_roots(g, sys));

    const LaurentPolynomial u = random_laurent(rng, n, 3, -2, 2);
    const LaurentPolynomial v = random_laurent(rng, n, 3, -2, 2);
    LaurentPolynomial combo = u;
    combo *= Rational(3, 4);
    combo += v;
    EXPECT_EQ(sum_over_roots(combo, sys),
              Rational(3, 4) * sum_over_roots(u, sys) + sum_over_roots(v, sys));
  }
}

TEST(Formulas, InvariantUnderMonomialChangeOfCoordinates) {
  Random rng(63);
  for (int k = 0; k < 12; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto system = random_developed_system(rng, n, 4, 2, 9);
    const IntMatrix q = random_unimodular(rng, n, 3);
    std::vector<LaurentPolynomial> moved;
    for (const auto& f : system) moved.push_back(f.substitute(q));
    const SystemInstance a(system), b(moved);
    const Monomial m = random_monomial(rng, n, -2, 2);
    const LaurentPolynomial g = random_laurent(rng, n, 3, -2, 2);
    EXPECT_EQ(product_over_roots(m, a), product_over_roots(LaurentPolynomial(m).substitute(q), b));
    EXPECT_EQ(sum_over_roots(g, a), sum_over_roots(g.substitute(q), b));
  }
}

TEST(Formulas, BernsteinNumberIgnoresEquationOrder) {
  Random rng(64);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    auto system = random_developed_system(rng, n, 5, 3, 9);
    const Integer count = bernstein_number(SystemInstance(system));
    std::reverse(system.begin(), system.end());
    EXPECT_EQ(bernstein_number(SystemInstance(system)), count);
  }
}

TEST(Formulas, SerialAndParallelAgree) {
  Random rng(65);
  for (int k = 0; k < 8; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto system = random_developed_system(rng, n, 5, 3, 9);
    const SystemInstance s(system, Exec::serial), p(system, Exec::parallel);
    EXPECT_EQ(s.coefficients(), p.coefficients());
    const Monomial m = random_monomial(rng, n, -2, 2);
    const LaurentPolynomial g = random_laurent(rng, n, 3, -2, 2);
    EXPECT_EQ(product_over_roots(m, s, Exec::serial), product_over_roots(m, p, Exec::parallel));
    EXPECT_EQ(sum_over_roots(g, s, Exec::serial), sum_over_roots(g, p, Exec::parallel));
  }
}

TEST(Formulas, AgreeWithBinomialOracle) {
  Random rng(66);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const BinomialInstance inst = random_binomial(rng, n, 3);
    const SystemInstance sys(inst.system());
    const Monomial m = random_monomial(rng, n, -3, 3);
    EXPECT_EQ(product_over_roots(m, sys), binomial_aggregate(inst.a, inst.d, m, Aggregate::product));
    EXPECT_EQ(sum_over_roots(LaurentPolynomial(m), sys),
              binomial_aggregate(inst.a, inst.d, m, Aggregate::sum));
  }
}

TEST(Formulas, AgreeWithUnivariateOracle) {
  Random rng(67);
  for (int k = 0; k < 40; ++k) {
    const LaurentPolynomial f = random_univariate(rng, 8, 9);
    const SystemInstance sys({f});
    const LaurentPolynomial g = random_laurent(rng, 1, 5, -3, 3);
    EXPECT_EQ(sum_over_roots(g, sys), univariate_aggregate(f, g, Aggregate::sum));
    const Monomial m = random_monomial(rng, 1, -3, 3);
    EXPECT_EQ(product_over_roots(m, sys),
              univariate_aggregate(f, LaurentPolynomial(m), Aggregate::product));
  }
}
