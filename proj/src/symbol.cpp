#include "vieta/symbol.hpp"

#include <algorithm>
#include <map>

#include "vieta/errors.hpp"

namespace vieta {

SymbolInput::SymbolInput(std::vector<Monomial> ms) : monomials(std::move(ms)) {
  if (monomials.size() < 2) throw DimensionError("a symbol needs n+1 >= 2 monomials");
  const std::size_t n = monomials.size() - 1;
  for (const auto& m : monomials) {
    if (m.dim() != n) throw DimensionError("symbol needs n+1 monomials in n variables");
    if (m.coeff == 0) throw PreconditionError("zero coefficient in a symbol");
  }
}

IntMatrix SymbolInput::exponent_matrix() const {
  IntMatrix a;
  for (const auto& m : monomials) a.push_back(m.exp);
  return a;
}

namespace {

void check_shape(const IntMatrix& a) {
  if (a.size() < 2) throw DimensionError("exponent matrix needs n+1 >= 2 rows");
  for (const auto& row : a) {
    if (row.size() != a.size() - 1) throw DimensionError("exponent matrix must be (n+1) x n");
  }
}

IntMatrix drop(const IntMatrix& a, std::size_t r1, std::size_t r2, std::size_t col) {
  IntMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == r1 || i == r2) continue;
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (k != col) row.push_back(a[i][k]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

} // namespace

Integer deleted_row_minor(const IntMatrix& a, std::size_t i) {
  check_shape(a);
  return determinant(drop(a, i, kNone, kNone));
}

int sign_exponent_B(const IntMatrix& a) {
  check_shape(a);
  const std::size_t n = a.size() - 1;
  Integer b(0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (a[i][k] == 0 || a[j][k] == 0) continue;
        b += Integer(a[i][k]) * a[j][k] * determinant(drop(a, i, j, k));
      }
    }
  }
  return static_cast<int>(abs(b) % 2);
}

// ---------------------------------------------------------------------------

FactoredRational FactoredRational::power_of(const Rational& base, const Integer& exponent) {
  if (base == 0) throw PreconditionError("zero base in a factored power");
  FactoredRational out;
  if (base < 0 && exponent % 2 != 0) out.sign = -1;
  Integer num = abs(numerator(base));
  Integer den = denominator(base);
  if (exponent != 0) {
    if (num != 1) out.factors.emplace_back(num, exponent);
    if (den != 1) out.factors.emplace_back(den, Integer(-exponent));
  }
  return out;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
  sign *= other.sign;
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  return *this;
}

FactoredRational operator*(FactoredRational a, const FactoredRational& b) {
  a *= b;
  return a;
}

FactoredRational FactoredRational::inverse() const { return pow(Integer(-1)); }

FactoredRational FactoredRational::pow(const Integer& k) const {
  FactoredRational out;
  out.sign = (sign < 0 && k % 2 != 0) ? -1 : 1;
  for (const auto& [b, e] : factors) {
    Integer ek = e * k;
    if (ek != 0) out.factors.emplace_back(b, ek);
  }
  return out;
}

namespace {

// Refine to pairwise coprime numbers > 1 generating the same multiplicative
// group.
std::vector<Integer> coprime_basis(std::vector<Integer> nums) {
  std::vector<Integer> basis;
  for (auto& x : nums) {
    if (x > 1) basis.push_back(std::move(x));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        Integer g = gcd(basis[i], basis[j]);
        if (g == 1) continue;
        Integer a = basis[i] / g;
        Integer b = basis[j] / g;
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* x : {&g, &a, &b}) {
          if (*x > 1) basis.push_back(*x);
        }
        changed = true;
      }
    }
  }
  return basis;
}

std::map<Integer, Integer> exponents_over(const FactoredRational& f, const std::vector<Integer>& basis) {
  std::map<Integer, Integer> out;
  for (const auto& [base, e] : f.factors) {
    Integer rest = base;
    for (const auto& p : basis) {
      Integer count(0);
      while (rest % p == 0) {
        rest /= p;
        ++count;
      }
      if (count != 0) out[p] += count * e;
    }
    if (rest != 1) throw ConsistencyError("coprime basis does not cover a factor");
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::vector<Integer> bases_of(const FactoredRational& f) {
  std::vector<Integer> out;
  for (const auto& fe : f.factors) out.push_back(fe.first);
  return out;
}

} // namespace

FactoredRational FactoredRational::canonical() const {
  FactoredRational out;
  out.sign = sign;
  for (auto& [b, e] : exponents_over(*this, coprime_basis(bases_of(*this)))) {
    out.factors.emplace_back(b, e);
  }
  return out;
}

bool same_value(const FactoredRational& a, const FactoredRational& b) {
  if (a.sign != b.sign) return false;
  std::vector<Integer> all = bases_of(a);
  for (auto& x : bases_of(b)) all.push_back(std::move(x));
  auto basis = coprime_basis(std::move(all));
  return exponents_over(a, basis) == exponents_over(b, basis);
}

Rational FactoredRational::value() const {
  Rational v(sign);
  for (const auto& [b, e] : canonical().factors) v *= rational_pow(Rational(b), e);
  return v;
}

std::string FactoredRational::to_string() const {
  FactoredRational c = canonical();
  std::string s = c.sign < 0 ? "-1" : "1";
  for (const auto& [b, e] : c.factors) s += " * " + b.str() + "^" + e.str();
  return s;
}

// ---------------------------------------------------------------------------

FactoredRational factored_symbol(const SymbolInput& inp) {
  const IntMatrix a = inp.exponent_matrix();
  FactoredRational out;
  if (sign_exponent_B(a) == 1) out.sign = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer e = deleted_row_minor(a, i);
    if (i % 2 == 1) e = -e;
    out *= FactoredRational::power_of(inp.monomials[i].coeff, e);
  }
  return out;
}

Rational symbol_of_monomials(const SymbolInput& inp) { return factored_symbol(inp).value(); }

std::vector<Monomial> leading_monomials(std::span<const LaurentPolynomial> system,
                                        const MinkowskiSystem& ms, std::size_t vertex) {
  if (system.size() != ms.size()) throw DimensionError("system and Minkowski system differ in size");
  if (vertex >= ms.total().vertices().size()) {
    throw PreconditionError("not a vertex of the total polytope");
  }
  auto parts = ms.vertex_decomposition(vertex);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    Exponent e = to_exponent(ms.summand(i).vertices()[parts[i]]);
    Rational c = system[i].coefficient(e);
    if (c == 0) throw PreconditionError("summand vertex is not in the support of f_i");
    out.emplace_back(c, std::move(e));
  }
  return out;
}

FactoredRational factored_vertex_symbol(const Monomial& f0,
                                        std::span<const LaurentPolynomial> system,
                                        const MinkowskiSystem& ms, std::size_t vertex) {
  if (f0.dim() != ms.total().ambient_dim()) throw DimensionError("f0 has wrong dimension");
  std::vector<Monomial> ms_list{f0};
  for (auto& m : leading_monomials(system, ms, vertex)) ms_list.push_back(std::move(m));
  return factored_symbol(SymbolInput(std::move(ms_list)));
}

Rational vertex_symbol(const Monomial& f0, std::span<const LaurentPolynomial> system,
                       const MinkowskiSystem& ms, std::size_t vertex) {
  return factored_vertex_symbol(f0, system, ms, vertex).value();
}

Rational parshin_symbol_at_flag(const Monomial& f0, std::span<const LaurentPolynomial> system,
                                const MinkowskiSystem& ms, const Flag& flag) {
  const Polytope& total = ms.total();
  int sign = flag_sign(total, flag);
  std::size_t vertex = static_cast<std::size_t>(total.face(flag.vertex_face()).vertices[0]);
  FactoredRational s = factored_vertex_symbol(f0, system, ms, vertex);
  return (sign > 0 ? s : s.inverse()).value();
}

} // namespace vieta
