#pragma once

// Ground truth computed without the polytope formulas: closed forms for
// binomial and univariate systems, simplicial homology for map degrees, and
// floating-point root finding for bivariate systems.

#include <cstdint>
#include <span>
#include <vector>

#include "vieta/flags.hpp"
#include "vieta/laurent.hpp"
#include "vieta/rational.hpp"

namespace vieta {

enum class Aggregate { product, sum };

struct SNFResult {
  Matrix<Integer> U, S, V; // A = U S V
};

// Smith normal form of a nonsingular square integer matrix.
SNFResult smith_normal_form(const Matrix<Integer>& a);
SNFResult smith_normal_form(const IntMatrix& a);

Matrix<Integer> multiply(const Matrix<Integer>& a, const Matrix<Integer>& b);

// Product or sum of f0 over the |det A| roots of t^{a_i} = d_i, where a_i is
// row i of A.
Rational binomial_aggregate(const IntMatrix& a, std::span<const Rational> d, const Monomial& f0,
                            Aggregate mode);

// Product (f0 a monomial) or sum of f0 over the roots of f1 in C^*, with
// multiplicity. Sums use Newton's identities.
Rational univariate_aggregate(const LaurentPolynomial& f1, const LaurentPolynomial& f0,
                              Aggregate mode);

// Degree of the simplicial map induced on barycentric subdivisions, read off
// the top (reduced, in dimension 0) homology over Q.
long degree_by_homology(const FaceMap& psi);

struct NumericOptions {
  double residual_tol = 1e-8;   // scaled residual of an accepted root
  double separation_tol = 1e-6; // relative distance between distinct roots
  double zero_tol = 1e-9;       // |t_i| below this (relative) is off the torus
};

// Product or sum of f0 over the torus roots of a bivariate system, by an exact
// Sylvester resultant in t2, companion-matrix roots in t1 and Newton polishing.
// Throws IllConditioned when roots cluster, residuals are ambiguous or the
// aggregate cancels.
double numeric_bivariate_aggregate(std::span<const LaurentPolynomial> system,
                                   const LaurentPolynomial& f0, Aggregate mode,
                                   const NumericOptions& opts = {});

} // namespace vieta
