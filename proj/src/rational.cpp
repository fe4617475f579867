#include "vieta/rational.hpp"

#include <limits>
#include <utility>

#include "vieta/errors.hpp"

namespace vieta {

namespace {

constexpr unsigned long kMaxPowerExponent = 50'000'000UL;

} // namespace

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) {
      throw ParseError("zero denominator in '" + text + "'", slash + 1);
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e) != nullptr) throw;
    throw ParseError("malformed rational '" + text + "'", 0);
  }
}

Rational rational_pow(const Rational& base, const Integer& exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw PreconditionError("zero raised to a negative power");
    return Rational(0);
  }
  Integer mag = abs(exponent);
  if (mag > kMaxPowerExponent) {
    throw PreconditionError("exponent " + exponent.str() + " too large to evaluate");
  }
  auto e = mag.convert_to<unsigned long>();
  Integer num = pow(Integer(numerator(base)), e);
  Integer den = pow(Integer(denominator(base)), e);
  if (exponent < 0) std::swap(num, den);
  return Rational(num, den);
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Integer determinant(Matrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer determinant(const IntMatrix& m) {
  Matrix<Integer> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    big[i].assign(m[i].begin(), m[i].end());
  }
  return determinant(std::move(big));
}

Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rank(Matrix<Rational> m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

std::vector<std::size_t> pivot_columns(Matrix<Rational> m) {
  if (m.empty()) return {};
  return rref(m, m.front().size());
}

Matrix<Rational> nullspace(Matrix<Rational> m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<Rational> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Exponent primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l(1);
  for (const auto& x : v) {
    Integer d = denominator(x);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> ints;
  Integer g(0);
  for (const auto& x : v) {
    Integer z = numerator(x) * (l / denominator(x));
    g = gcd(g, z);
    ints.push_back(z);
  }
  if (g == 0) throw PreconditionError("zero vector has no primitive direction");
  Exponent out;
  out.reserve(ints.size());
  for (auto& z : ints) out.push_back(checked_int64(z / g));
  return out;
}

std::int64_t checked_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ConsistencyError("integer " + v.str() + " exceeds 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

} // namespace vieta
