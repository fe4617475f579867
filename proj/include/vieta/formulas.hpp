#pragma once

#include <span>
#include <vector>

#include "vieta/kernels.hpp"
#include "vieta/laurent.hpp"
#include "vieta/polytope.hpp"
#include "vieta/symbol.hpp"

namespace vieta {

// n Laurent polynomials in n variables with developed Newton polytopes, none
// of them a monomial. The Minkowski system and the combinatorial coefficient
// of every vertex are computed once at construction.
class SystemInstance {
public:
  explicit SystemInstance(std::vector<LaurentPolynomial> system, Exec exec = Exec::parallel);

  std::size_t dim() const { return system_.size(); }
  const std::vector<LaurentPolynomial>& system() const { return system_; }
  const MinkowskiSystem& minkowski() const { return ms_; }

  // Vertices of the total polytope in lexicographic order.
  std::vector<Exponent> vertices() const;
  // c(A) for each vertex, same order.
  const std::vector<long>& coefficients() const { return coefficients_; }

  std::size_t vertex_index(const Exponent& vertex) const;

private:
  std::vector<LaurentPolynomial> system_;
  MinkowskiSystem ms_;
  std::vector<long> coefficients_;
};

// prod over vertices A of [f0, f_1, ..., f_n]_A ^ ((-1)^n c(A)), kept factored.
FactoredRational factored_product_over_roots(const Monomial& f0, const SystemInstance& sys,
                                             Exec exec = Exec::parallel);
Rational product_over_roots(const Monomial& f0, const SystemInstance& sys,
                            Exec exec = Exec::parallel);
// Throws PreconditionError unless f0 is a single monomial.
Rational product_over_roots(const LaurentPolynomial& f0, const SystemInstance& sys,
                            Exec exec = Exec::parallel);

// (-1)^n sum over vertices A of c(A) res_A(f0 J / f).
Rational sum_over_roots(const LaurentPolynomial& f0, const SystemInstance& sys,
                        Exec exec = Exec::parallel);

// Root count from the sum formula with f0 = 1, checked against the
// inclusion-exclusion mixed volume; a mismatch throws ConsistencyError.
Integer bernstein_number(const SystemInstance& sys, Exec exec = Exec::parallel);

} // namespace vieta
