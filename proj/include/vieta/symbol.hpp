#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vieta/flags.hpp"
#include "vieta/laurent.hpp"
#include "vieta/polytope.hpp"
#include "vieta/rational.hpp"

namespace vieta {

// n+1 monomials in n variables.
struct SymbolInput {
  std::vector<Monomial> monomials;

  explicit SymbolInput(std::vector<Monomial> ms);

  std::size_t dim() const { return monomials.size() - 1; }
  IntMatrix exponent_matrix() const;
};

// B mod 2 for an (n+1) x n exponent matrix.
int sign_exponent_B(const IntMatrix& a);

// Determinant of the matrix with row i removed.
Integer deleted_row_minor(const IntMatrix& a, std::size_t i);

// sign * prod base^exponent with integer bases > 1. Exponents may be
// negative and arbitrarily large, so comparisons never expand the powers.
struct FactoredRational {
  int sign = 1;
  std::vector<std::pair<Integer, Integer>> factors;

  static FactoredRational power_of(const Rational& base, const Integer& exponent);

  FactoredRational& operator*=(const FactoredRational& other);
  FactoredRational inverse() const;
  FactoredRational pow(const Integer& k) const;

  // Pairwise coprime bases in increasing order, zero exponents removed.
  FactoredRational canonical() const;

  // Expands the powers; throws PreconditionError past rational_pow's limit.
  Rational value() const;

  std::string to_string() const;
};

FactoredRational operator*(FactoredRational a, const FactoredRational& b);

// Exact equality of the represented rationals.
bool same_value(const FactoredRational& a, const FactoredRational& b);

FactoredRational factored_symbol(const SymbolInput& inp);
Rational symbol_of_monomials(const SymbolInput& inp);

// The leading monomials f_i(A_i) t^{A_i} of the system at a vertex of the
// Minkowski sum of its Newton polytopes.
std::vector<Monomial> leading_monomials(std::span<const LaurentPolynomial> system,
                                        const MinkowskiSystem& ms, std::size_t vertex);

FactoredRational factored_vertex_symbol(const Monomial& f0,
                                        std::span<const LaurentPolynomial> system,
                                        const MinkowskiSystem& ms, std::size_t vertex);
Rational vertex_symbol(const Monomial& f0, std::span<const LaurentPolynomial> system,
                       const MinkowskiSystem& ms, std::size_t vertex);

// Vertex symbol at the flag's vertex raised to the flag sign.
Rational parshin_symbol_at_flag(const Monomial& f0, std::span<const LaurentPolynomial> system,
                                const MinkowskiSystem& ms, const Flag& flag);

} // namespace vieta
