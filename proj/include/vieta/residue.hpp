#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vieta/flags.hpp"
#include "vieta/kernels.hpp"
#include "vieta/laurent.hpp"
#include "vieta/polytope.hpp"

namespace vieta {

// Integral covector positive on a pointed cone, with the smallest value it
// takes on the support of interest.
struct WeightFunctional {
  Exponent w;
  std::int64_t min_step = 1;

  std::int64_t operator()(const Exponent& m) const;
};

// w = sum of the primitive inner normals at vertex A of the Newton polytope of
// f; min_step = min <w, m - A> over the support of f minus A. For a monomial f
// there is nothing to expand and min_step is 1.
WeightFunctional vertex_weight(const LaurentPolynomial& f, const Exponent& vertex);

// Laurent series whose terms all have weight in [0, bound]; every coefficient
// of weight <= bound is exact. Terms of larger weight are dropped on the fly.
class TruncatedSeries {
public:
  TruncatedSeries(std::size_t n, WeightFunctional weight, std::int64_t bound);

  // Rejects terms of negative weight; drops terms beyond the bound.
  static TruncatedSeries from_polynomial(const LaurentPolynomial& p, WeightFunctional weight,
                                         std::int64_t bound);

  std::size_t dim() const { return n_; }
  const WeightFunctional& weight() const { return weight_; }
  std::int64_t bound() const { return bound_; }
  const LaurentPolynomial::TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient(Exponent(n_, 0)); }

  void add_term(const Exponent& e, const Rational& c);

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries scaled(const Rational& c) const;

  // t_i d/dt_i, exact on the truncation.
  TruncatedSeries log_derivative(std::size_t i) const;

  // Requires a nonzero constant term; 1/s = (1/s_0) sum_k (1 - s/s_0)^k.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(std::int64_t k) const;

  // Same series cut to a smaller bound.
  TruncatedSeries truncated(std::int64_t bound) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_ == b.n_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

private:
  void check_compatible(const TruncatedSeries& other) const;

  std::size_t n_;
  WeightFunctional weight_;
  std::int64_t bound_;
  LaurentPolynomial::TermMap terms_;
};

// Expansion of 1 / f~ with f~ = f / (f(A) t^A) as the geometric series in
// 1 - f~, cut at weight `bound`.
TruncatedSeries truncated_inverse(const LaurentPolynomial& f, const Exponent& vertex,
                                  std::int64_t bound);

// Weight bound that makes the constant term of g / f at A exact.
std::int64_t residue_bound(const LaurentPolynomial& g, const LaurentPolynomial& f,
                           const Exponent& vertex);

// Constant term of the Laurent series of g / f at the vertex A of the Newton
// polytope of f. Coefficients of 1 / f~ are produced on demand by the
// recursion S_x = [x = 0] + sum_d h_d S_{x-d}, h = 1 - f~, pruned to the cone
// of the Newton polytope at A.
Rational residue_at_vertex(const LaurentPolynomial& g, const LaurentPolynomial& f,
                           const Exponent& vertex);

// Same constant term read off truncated_inverse at the given bound.
Rational residue_at_vertex_truncated(const LaurentPolynomial& g, const LaurentPolynomial& f,
                                     const Exponent& vertex, std::int64_t bound);

// res_A(f0 * J / f) with J the toric Jacobian and f = f_1 ... f_n.
Rational log_form_residue(const LaurentPolynomial& f0, std::span<const LaurentPolynomial> system,
                          const Exponent& vertex);

// s = c t^a u with u a unit series (constant term 1).
struct LogUnit {
  Monomial lead;
  TruncatedSeries unit;
};

// Constant term of prefactor * ds_1/s_1^{m_1} ∧ ... ∧ ds_n/s_n^{m_n} relative
// to dt_1/t_1 ∧ ... ∧ dt_n/t_n. The units must share a weight functional and
// be known up to twice `bound`; the result is computed at bound and 2*bound
// and the two must agree. Without an explicit bound, 8 * min_step is used.
Rational toroidal_residue(const TruncatedSeries& prefactor, std::span<const LogUnit> units,
                          std::span<const std::int64_t> m,
                          std::optional<std::int64_t> bound = std::nullopt);

Rational wedge_log_residue(std::span<const LogUnit> units, std::span<const std::int64_t> m,
                           std::optional<std::int64_t> bound = std::nullopt);

// Flag sign times log_form_residue at the flag's vertex.
Rational parshin_residue_at_flag(const LaurentPolynomial& f0,
                                 std::span<const LaurentPolynomial> system,
                                 const MinkowskiSystem& ms, const Flag& flag);

} // namespace vieta
