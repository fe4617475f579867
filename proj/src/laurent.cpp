#include "vieta/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vieta/polytope.hpp"

namespace vieta {

Monomial::Monomial(Rational c, Exponent e) : coeff(std::move(c)), exp(std::move(e)) {
  if (coeff == 0) throw PreconditionError("monomial with zero coefficient");
}

LaurentPolynomial::LaurentPolynomial(std::size_t n) : n_(n) {}

LaurentPolynomial::LaurentPolynomial(const Monomial& m) : n_(m.dim()) {
  terms_.emplace(m.exp, m.coeff);
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t n, const Rational& c) {
  LaurentPolynomial p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

void LaurentPolynomial::check_dim(std::size_t other) const {
  if (other != n_) {
    throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " +
                         std::to_string(other));
  }
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  check_dim(e.size());
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> LaurentPolynomial::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  check_dim(e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_dim(other.n_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_dim(other.n_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  check_dim(shift.size());
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent m = e;
    for (std::size_t i = 0; i < n_; ++i) m[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(m), c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::log_derivative(std::size_t i) const {
  if (i >= n_) throw DimensionError("variable index out of range");
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != 0) out.terms_.emplace_hint(out.terms_.end(), e, c * e[i]);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute(const IntMatrix& q) const {
  if (q.size() != n_) throw DimensionError("substitution matrix has wrong row count");
  LaurentPolynomial out(q.empty() ? n_ : q.front().size());
  for (const auto& [e, c] : terms_) {
    Exponent m(out.n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < out.n_; ++j) m[j] += e[i] * q[i][j];
    }
    out.add_term(m, c);
  }
  return out;
}

Monomial LaurentPolynomial::as_monomial() const {
  if (!is_monomial()) throw PreconditionError("expected a single monomial");
  return Monomial(terms_.begin()->second, terms_.begin()->first);
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
  a -= b;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return laurent_mul(a, b);
}

LaurentPolynomial laurent_mul(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.dim() != g.dim()) {
    throw DimensionError("laurent_mul: dimension mismatch");
  }
  const std::size_t n = f.dim();
  LaurentPolynomial out(n);
  Exponent m(n);
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : g.terms()) {
      for (std::size_t i = 0; i < n; ++i) m[i] = e1[i] + e2[i];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

LaurentPolynomial initial_form(const LaurentPolynomial& f, std::span<const Rational> w) {
  if (f.is_zero()) throw PreconditionError("initial form of the zero polynomial");
  if (w.size() != f.dim()) throw DimensionError("covector has wrong dimension");
  std::vector<Rational> values;
  values.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    Rational v(0);
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    values.push_back(std::move(v));
  }
  const Rational best = *std::max_element(values.begin(), values.end());
  LaurentPolynomial out(f.dim());
  std::size_t k = 0;
  for (const auto& [e, c] : f.terms()) {
    if (values[k++] == best) out.add_term(e, c);
  }
  return out;
}

LaurentPolynomial initial_form(const LaurentPolynomial& f, const Exponent& w) {
  std::vector<Rational> q(w.begin(), w.end());
  return initial_form(f, std::span<const Rational>(q));
}

LaurentPolynomial toric_jacobian(std::span<const LaurentPolynomial> system) {
  const std::size_t n = system.size();
  if (n == 0) throw DimensionError("toric_jacobian: empty system");
  for (const auto& f : system) {
    if (f.dim() != n) throw DimensionError("toric_jacobian: need n polynomials in n variables");
  }
  Matrix<LaurentPolynomial> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries[i].push_back(system[i].log_derivative(j));
  }
  // Leibniz expansion; n stays small (at most 4 in practice).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial det(n);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    LaurentPolynomial term = LaurentPolynomial::constant(n, Rational(sign));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * entries[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Rational vertex_coefficient(const LaurentPolynomial& f, const Exponent& vertex) {
  if (vertex.size() != f.dim()) throw DimensionError("vertex has wrong dimension");
  if (f.is_zero()) throw PreconditionError("zero polynomial has no vertices");
  Polytope newton = newton_polytope(f);
  if (!newton.vertex_index(to_point(vertex))) {
    throw PreconditionError("exponent is not a vertex of the Newton polytope");
  }
  return f.coefficient(vertex);
}

LaurentPolynomial product(std::span<const LaurentPolynomial> factors) {
  if (factors.empty()) throw DimensionError("product of no factors");
  LaurentPolynomial acc = LaurentPolynomial::constant(factors.front().dim(), Rational(1));
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      out << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << "t" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

} // namespace vieta
