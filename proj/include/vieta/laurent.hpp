#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vieta/errors.hpp"
#include "vieta/rational.hpp"

namespace vieta {

struct Monomial {
  Rational coeff;
  Exponent exp;

  Monomial(Rational c, Exponent e);
  std::size_t dim() const { return exp.size(); }
};

// Finite Laurent polynomial over Q in a fixed number of variables. Terms are
// kept in lexicographic exponent order and zero coefficients are never stored.
class LaurentPolynomial {
public:
  using TermMap = std::map<Exponent, Rational>;

  explicit LaurentPolynomial(std::size_t n);
  LaurentPolynomial(const Monomial& m);

  static LaurentPolynomial constant(std::size_t n, const Rational& c);

  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Coefficient of t^e (zero when absent).
  Rational coefficient(const Exponent& e) const;
  std::vector<Exponent> support() const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);

  // Multiply by t^shift.
  LaurentPolynomial shifted(const Exponent& shift) const;

  // t_i * d/dt_i.
  LaurentPolynomial log_derivative(std::size_t i) const;

  // Monomial change of variables t -> t^Q: exponent row m becomes m Q.
  LaurentPolynomial substitute(const IntMatrix& q) const;

  // Lone term; throws PreconditionError unless is_monomial().
  Monomial as_monomial() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

private:
  void check_dim(std::size_t other) const;

  std::size_t n_;
  TermMap terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

LaurentPolynomial laurent_mul(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Terms of f on which <w, m> is maximal.
LaurentPolynomial initial_form(const LaurentPolynomial& f, std::span<const Rational> w);
LaurentPolynomial initial_form(const LaurentPolynomial& f, const Exponent& w);

// det(t_j d f_i / d t_j).
LaurentPolynomial toric_jacobian(std::span<const LaurentPolynomial> system);

// Coefficient of t^A where A must be a vertex of the Newton polytope of f.
Rational vertex_coefficient(const LaurentPolynomial& f, const Exponent& vertex);

LaurentPolynomial product(std::span<const LaurentPolynomial> factors);

namespace detail {

template <class Scalar>
Scalar power(const Scalar& x, std::int64_t e) {
  Scalar base = e < 0 ? Scalar(1) / x : x;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Scalar acc(1);
  while (k != 0) {
    if (k & 1U) acc *= base;
    base *= base;
    k >>= 1U;
  }
  return acc;
}

template <class Scalar>
Scalar from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
    return std::complex<double>(q.convert_to<double>(), 0.0);
  } else {
    return static_cast<Scalar>(q.convert_to<double>());
  }
}

} // namespace detail

// Evaluate at a point of the torus: Rational, double or std::complex<double>.
template <class Scalar>
Scalar laurent_eval(const LaurentPolynomial& f, std::span<const Scalar> point) {
  if (point.size() != f.dim()) {
    throw DimensionError("evaluation point has wrong dimension");
  }
  for (const auto& x : point) {
    if (x == Scalar(0)) throw PreconditionError("evaluation point has a zero coordinate");
  }
  Scalar sum(0);
  for (const auto& [e, c] : f.terms()) {
    Scalar term = detail::from_rational<Scalar>(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= detail::power(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

// Readable and reparseable: "t1^2*t2^-1 + 3", "-1/2*t1 - 2".
std::string to_string(const LaurentPolynomial& f);

} // namespace vieta
