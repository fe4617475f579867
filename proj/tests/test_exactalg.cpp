#include <gtest/gtest.h>

#include "helpers.hpp"
#include "vieta/errors.hpp"
#include "vieta/laurent.hpp"
#include "vieta/random.hpp"

using namespace vieta;
using vieta::test::P;

TEST(Rational, PrintsNumeratorOverDenominator) {
  EXPECT_EQ(to_string(Rational(6)), "6/1");
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(Rational, ExactPowers) {
  EXPECT_EQ(rational_pow(Rational(2, 3), Integer(-3)), Rational(27, 8));
  EXPECT_EQ(rational_pow(Rational(-1), Integer(1001)), Rational(-1));
  EXPECT_THROW(rational_pow(Rational(0), Integer(-1)), PreconditionError);
}

TEST(Rational, Determinants) {
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(IntMatrix{}), 1);
  EXPECT_EQ(determinant(Matrix<Rational>{{Rational(1, 2), 1}, {1, 4}}), Rational(1));
}

TEST(Laurent, Products) {
  EXPECT_EQ(laurent_mul(P("t1-2", 1), P("t1-3", 1)), P("t1^2-5*t1+6", 1));
  EXPECT_EQ(laurent_mul(P("3*t1^-1+t1", 1), LaurentPolynomial::constant(1, 1)),
            P("3*t1^-1+t1", 1));
  EXPECT_EQ(laurent_mul(P("t1-2", 2), P("t2-3", 2)), P("t1*t2 - 3*t1 - 2*t2 + 6", 2));
}

TEST(Laurent, InitialForms) {
  const auto f = P("t1^2+3*t1+5", 1);
  EXPECT_EQ(initial_form(f, Exponent{1}), P("t1^2", 1));
  EXPECT_EQ(initial_form(f, Exponent{-1}), P("5", 1));
  EXPECT_EQ(initial_form(P("t1+t2", 2), Exponent{1, 1}), P("t1+t2", 2));
}

TEST(Laurent, ToricJacobian) {
  EXPECT_EQ(toric_jacobian(std::vector{P("t1-7", 1)}), P("t1", 1));
  EXPECT_EQ(toric_jacobian(std::vector{P("t1^5", 1)}), P("5*t1^5", 1));
  EXPECT_EQ(toric_jacobian(vieta::test::system_of(2, {"t1-2", "t2-3"})), P("t1*t2", 2));
}

TEST(Laurent, VertexCoefficient) {
  EXPECT_EQ(vertex_coefficient(P("t1-2", 1), {0}), -2);
  EXPECT_EQ(vertex_coefficient(P("t1-2", 1), {1}), 1);
  EXPECT_EQ(vertex_coefficient(P("t1*t2 - 3*t1 - 2*t2 + 6", 2), {0, 0}), 6);
  EXPECT_THROW(vertex_coefficient(P("t1^2-1", 1), {1}), PreconditionError);
}

TEST(Laurent, Evaluation) {
  const std::vector<Rational> at23 = {Rational(2), Rational(3)};
  EXPECT_EQ(laurent_eval<Rational>(P("t1*t2", 2), at23), 6);
  const std::vector<Rational> at2 = {Rational(2)};
  EXPECT_EQ(laurent_eval<Rational>(P("t1^-1", 1), at2), Rational(1, 2));
  EXPECT_EQ(laurent_eval<Rational>(P("t1^2-5*t1+6", 1), at2), 0);
  const std::vector<double> d = {2.0};
  EXPECT_DOUBLE_EQ(laurent_eval<double>(P("t1^-1", 1), d), 0.5);
  const std::vector<Rational> zero = {Rational(0)};
  EXPECT_THROW(laurent_eval<Rational>(P("t1", 1), zero), PreconditionError);
}

TEST(Laurent, DimensionMismatchIsAnError) {
  EXPECT_THROW(P("t1", 1) + P("t1", 2), DimensionError);
  EXPECT_THROW(laurent_mul(P("t1", 1), P("t2", 2)), DimensionError);
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
  Random rng(11);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto f = random_laurent(rng, n, 4, -2, 2);
    const auto g = random_laurent(rng, n, 4, -2, 2);
    const auto h = random_laurent(rng, n, 4, -2, 2);
    EXPECT_EQ(laurent_mul(laurent_mul(f, g), h), laurent_mul(f, laurent_mul(g, h)));
    EXPECT_EQ(laurent_mul(f, g), laurent_mul(g, f));
    EXPECT_EQ(laurent_mul(f, g + h), laurent_mul(f, g) + laurent_mul(f, h));
  }
}

TEST(Laurent, InitialFormIsMultiplicative) {
  Random rng(12);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto f = random_laurent(rng, n, 4, -2, 2);
    const auto g = random_laurent(rng, n, 4, -2, 2);
    Exponent w(n);
    for (auto& x : w) x = rng.uniform(-3, 3);
    EXPECT_EQ(initial_form(f * g, w), initial_form(f, w) * initial_form(g, w));
  }
}

TEST(Laurent, JacobianAlternatesUnderRowSwap) {
  Random rng(13);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<LaurentPolynomial> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(random_laurent(rng, n, 3, -2, 2));
    const auto j = toric_jacobian(s);
    std::swap(s[0], s[n - 1]);
    LaurentPolynomial neg = toric_jacobian(s);
    neg *= Rational(-1);
    EXPECT_EQ(j, neg);
  }
}

TEST(Laurent, NewtonPolytopeOfProductIsMinkowskiSum) {
  Random rng(14);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto f = random_laurent(rng, n, 4, -2, 2);
    const auto g = random_laurent(rng, n, 4, -2, 2);
    const std::vector<Polytope> parts = {newton_polytope(f), newton_polytope(g)};
    EXPECT_EQ(newton_polytope(f * g), minkowski_sum(parts));
  }
}

TEST(Laurent, MonomialSubstitution) {
  // t -> t^Q with rows of Q the images: t1 -> t1 t2, t2 -> t2.
  const IntMatrix q = {{1, 1}, {0, 1}};
  EXPECT_EQ(P("t1 + 2*t2^-1", 2).substitute(q), P("t1*t2 + 2*t2^-1", 2));
}
