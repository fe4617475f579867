#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace vieta {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Integer exponent vector in Z^n. The dimension is the vector length.
using Exponent = std::vector<std::int64_t>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

using IntMatrix = Matrix<std::int64_t>;

// Always "p/q", including integers ("6/1").
std::string to_string(const Rational& q);

// Accepts "p", "p/q", with optional sign.
Rational parse_rational(const std::string& text);

// Exact power; negative exponents invert. Throws PreconditionError for 0^-k
// and for exponents too large to materialize.
Rational rational_pow(const Rational& base, const Integer& exponent);

Integer gcd(const Integer& a, const Integer& b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Fraction-free Bareiss elimination. The 0x0 determinant is 1.
Integer determinant(Matrix<Integer> m);
Integer determinant(const IntMatrix& m);
Rational determinant(Matrix<Rational> m);

std::size_t rank(Matrix<Rational> m);

// Pivot columns of the reduced row echelon form.
std::vector<std::size_t> pivot_columns(Matrix<Rational> m);

// Basis of {x : m x = 0}, one vector per free column.
Matrix<Rational> nullspace(Matrix<Rational> m, std::size_t cols);

// Scale a nonzero rational vector to a primitive integer vector of the same
// direction.
Exponent primitive_integer_vector(const std::vector<Rational>& v);

std::int64_t checked_int64(const Integer& v);

} // namespace vieta
