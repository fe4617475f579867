#include <gtest/gtest.h>

#include "helpers.hpp"
#include "vieta/errors.hpp"
#include "vieta/flags.hpp"
#include "vieta/random.hpp"
#include "vieta/symbol.hpp"

using namespace vieta;
using vieta::test::face_with;
using vieta::test::hull_of;

namespace {

Monomial M(std::int64_t num, std::int64_t den, Exponent e) {
  return Monomial(Rational(num, den), std::move(e));
}

// B straight from its definition: sum over columns k and row pairs i < j of
// a_ik a_jk times the minor without rows i, j and column k.
int b_by_definition(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t n = rows - 1;
  Integer total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = i + 1; j < rows; ++j) {
        IntMatrix minor;
        for (std::size_t r = 0; r < rows; ++r) {
          if (r == i || r == j) continue;
          std::vector<std::int64_t> row;
          for (std::size_t c = 0; c < n; ++c) {
            if (c != k) row.push_back(a[r][c]);
          }
          minor.push_back(row);
        }
        total += Integer(a[i][k]) * a[j][k] * determinant(minor);
      }
    }
  }
  return static_cast<int>(((total % 2) + 2) % 2);
}

// All nonzero lambda in F_2^{n+1} with lambda^T a = 0 mod 2.
std::vector<std::vector<int>> relations_mod2(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t n = rows - 1;
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << rows); ++mask) {
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      std::int64_t s = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        if ((mask >> r) & 1U) s += a[r][c];
      }
      ok = s % 2 == 0;
    }
    if (!ok) continue;
    std::vector<int> lambda(rows);
    for (std::size_t r = 0; r < rows; ++r) lambda[r] = static_cast<int>((mask >> r) & 1U);
    out.push_back(lambda);
  }
  return out;
}

} // namespace

TEST(SignExponent, Examples) {
  EXPECT_EQ(sign_exponent_B({{1}, {1}}), 1);
  EXPECT_EQ(sign_exponent_B({{0}, {5}}), 0);
  EXPECT_EQ(sign_exponent_B({{1, 1}, {1, 0}, {0, 1}}), 0);
  EXPECT_THROW(sign_exponent_B({{1, 1}, {1, 0}}), DimensionError);
}

TEST(SignExponent, MatchesDefinition) {
  Random rng(41);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    IntMatrix a(n + 1, std::vector<std::int64_t>(n));
    for (auto& row : a) {
      for (auto& x : row) x = rng.uniform(-5, 5);
    }
    EXPECT_EQ(sign_exponent_B(a), b_by_definition(a));
  }
}

TEST(SignExponent, LinearRelationModTwo) {
  // Over F_2: B = 0 when the rows have rank < n; otherwise the relation
  // lambda is unique and B = lambda_0 + ... + lambda_n + 1.
  Random rng(42);
  int full = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    IntMatrix a(n + 1, std::vector<std::int64_t>(n));
    for (auto& row : a) {
      for (auto& x : row) x = rng.uniform(-5, 5);
    }
    const auto rel = relations_mod2(a);
    if (rel.size() != 1) {
      EXPECT_EQ(sign_exponent_B(a), 0);
      continue;
    }
    ++full;
    int s = 1;
    for (int x : rel[0]) s += x;
    EXPECT_EQ(sign_exponent_B(a), s % 2);

    // The primitive rational relation reduces to the same F_2 relation.
    Matrix<Rational> at(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r <= n; ++r) {
      for (std::size_t c = 0; c < n; ++c) at[c][r] = a[r][c];
    }
    const auto kernel = nullspace(at, n + 1);
    ASSERT_EQ(kernel.size(), 1u);
    const Exponent lambda = primitive_integer_vector(kernel[0]);
    std::int64_t q = 1;
    for (auto x : lambda) q += x;
    EXPECT_EQ(sign_exponent_B(a), ((q % 2) + 2) % 2);
  }
  EXPECT_GT(full, 50);
}

TEST(Symbol, Examples) {
  EXPECT_EQ(symbol_of_monomials(SymbolInput({M(2, 1, {1}), M(3, 1, {0})})), Rational(1, 3));
  EXPECT_EQ(symbol_of_monomials(SymbolInput({M(7, 2, {0}), M(7, 2, {0})})), 1);
  EXPECT_EQ(symbol_of_monomials(
                SymbolInput({M(2, 1, {0, 0}), M(3, 1, {1, 0}), M(5, 1, {0, 1})})),
            2);
}

TEST(Symbol, RejectsBadInput) {
  EXPECT_THROW(SymbolInput({M(1, 1, {1})}), DimensionError);
  EXPECT_THROW(SymbolInput({M(1, 1, {1}), Monomial(Rational(0), {0})}), PreconditionError);
}

TEST(Symbol, OneVariableTameSymbol) {
  // [a t^p, b t^q] = (-1)^{pq} a^q b^{-p}.
  Random rng(43);
  for (int k = 0; k < 200; ++k) {
    const Monomial f = random_monomial(rng, 1, -5, 5);
    const Monomial g = random_monomial(rng, 1, -5, 5);
    const std::int64_t p = f.exp[0], q = g.exp[0];
    Rational expected = rational_pow(f.coeff, Integer(q)) * rational_pow(g.coeff, Integer(-p));
    if ((p * q) % 2 != 0) expected = -expected;
    EXPECT_EQ(symbol_of_monomials(SymbolInput({f, g})), expected);
  }
}

TEST(Symbol, TransversalPoint) {
  // Zero first row, lower triangular rest with multiplicities on the diagonal:
  // the symbol is the first coefficient to the product of multiplicities.
  Random rng(44);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Monomial> ms;
    const Rational c0 = rng.nonzero_rational(9, 5);
    ms.emplace_back(c0, Exponent(n, 0));
    std::int64_t mu = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n, 0);
      for (std::size_t j = 0; j < i; ++j) e[j] = rng.uniform(-3, 3);
      e[i] = rng.uniform(1, 3);
      mu *= e[i];
      ms.emplace_back(rng.nonzero_rational(9, 5), e);
    }
    EXPECT_EQ(symbol_of_monomials(SymbolInput(ms)), rational_pow(c0, Integer(mu)));
  }
}

TEST(Symbol, FactoredFormMatchesValue) {
  Random rng(45);
  for (int k = 0; k < 200; ++k) {
    const SymbolInput inp = random_symbol_input(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 3);
    const FactoredRational f = factored_symbol(inp);
    EXPECT_EQ(f.value(), symbol_of_monomials(inp));
    EXPECT_EQ(f.canonical().value(), f.value());
    EXPECT_TRUE(same_value(f, FactoredRational::power_of(f.value(), Integer(1))));
  }
}

TEST(FactoredRational, ComparisonWithoutExpanding) {
  const auto a = FactoredRational::power_of(Rational(4), Integer(3));
  const auto b = FactoredRational::power_of(Rational(2), Integer(6));
  EXPECT_TRUE(same_value(a, b));
  EXPECT_FALSE(same_value(a, b.inverse()));
  const auto huge = FactoredRational::power_of(Rational(6, 5), Integer("100000000000000000000"));
  EXPECT_TRUE(same_value(huge * huge.inverse(), FactoredRational{}));
  EXPECT_TRUE(same_value(huge.pow(Integer(2)), huge * huge));
  EXPECT_THROW(huge.value(), PreconditionError);
  // 12/18 over the coprime basis {2, 3}.
  const auto q = FactoredRational::power_of(Rational(-12), Integer(1)) *
                 FactoredRational::power_of(Rational(18), Integer(-1));
  EXPECT_EQ(q.canonical().to_string(), "-1 * 2^1 * 3^-1");
}

TEST(VertexSymbol, SquareSystem) {
  const auto sys = vieta::test::system_of(2, {"t1-2", "t2-3"});
  const MinkowskiSystem ms({newton_polytope(sys[0]), newton_polytope(sys[1])});
  const Polytope& sq = ms.total();
  const Monomial f0(Rational(1), {1, 1});
  auto at = [&](Exponent v) { return vertex_symbol(f0, sys, ms, *sq.vertex_index(to_point(v))); };
  EXPECT_EQ(at({1, 1}), 1);
  EXPECT_EQ(at({0, 0}), 1);
  EXPECT_EQ(at({1, 0}), Rational(-1, 3));
  EXPECT_EQ(at({0, 1}), Rational(-1, 2));

  // The same numbers as plain monomial symbols.
  EXPECT_EQ(symbol_of_monomials(SymbolInput({f0, M(1, 1, {1, 0}), M(-3, 1, {0, 0})})),
            Rational(-1, 3));
  EXPECT_EQ(symbol_of_monomials(SymbolInput({f0, M(-2, 1, {0, 0}), M(1, 1, {0, 1})})),
            Rational(-1, 2));
}

TEST(VertexSymbol, ParshinSymbolAtFlags) {
  const auto sys = vieta::test::system_of(2, {"t1-2", "t2-3"});
  const MinkowskiSystem ms({newton_polytope(sys[0]), newton_polytope(sys[1])});
  const Polytope& sq = ms.total();
  const Monomial f0(Rational(1), {1, 1});
  auto flag = [&](Exponent v, Exponent w) {
    return Flag{{sq.vertex_face(*sq.vertex_index(to_point(v))), face_with(sq, {v, w}),
                 sq.improper_face()}};
  };
  EXPECT_EQ(parshin_symbol_at_flag(f0, sys, ms, flag({1, 1}, {0, 1})), 1);
  EXPECT_EQ(parshin_symbol_at_flag(f0, sys, ms, flag({1, 0}, {0, 0})), -3);
}

TEST(VertexSymbol, LeadingMonomialsUseVertexCoefficients) {
  const auto sys = vieta::test::system_of(2, {"t1-2", "t2-3"});
  const MinkowskiSystem ms({newton_polytope(sys[0]), newton_polytope(sys[1])});
  const auto lead = leading_monomials(sys, ms, *ms.total().vertex_index(to_point({1, 0})));
  ASSERT_EQ(lead.size(), 2u);
  EXPECT_EQ(lead[0].coeff, 1);
  EXPECT_EQ(lead[0].exp, (Exponent{1, 0}));
  EXPECT_EQ(lead[1].coeff, -3);
  EXPECT_EQ(lead[1].exp, (Exponent{0, 0}));
}
