#include "vieta/residue.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vieta/errors.hpp"

namespace vieta {

std::int64_t WeightFunctional::operator()(const Exponent& m) const {
  if (m.size() != w.size()) throw DimensionError("weight of an exponent of wrong dimension");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m[i];
  return s;
}

namespace {

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// The vertex cone of a Newton polytope at A, translated to the origin.
struct VertexCone {
  Polytope polytope;
  std::size_t vertex = 0;
  Rational lead;
  WeightFunctional weight;
  std::vector<Exponent> inner_normals;
  std::vector<Exponent> span_normals; // the cone lies in their common kernel

  bool contains(const Exponent& y) const {
    if (weight(y) < 0) return false;
    for (const auto& nu : inner_normals) {
      if (WeightFunctional{nu, 1}(y) < 0) return false;
    }
    for (const auto& eta : span_normals) {
      if (WeightFunctional{eta, 1}(y) != 0) return false;
    }
    return true;
  }
};

VertexCone vertex_cone(const LaurentPolynomial& f, const Exponent& vertex) {
  if (vertex.size() != f.dim()) throw DimensionError("vertex has wrong dimension");
  VertexCone cone{newton_polytope(f), 0, Rational(0), {}, {}, {}};
  auto idx = cone.polytope.vertex_index(to_point(vertex));
  if (!idx) throw PreconditionError("not a vertex of the Newton polytope");
  cone.vertex = *idx;
  cone.lead = f.coefficient(vertex);
  const std::size_t n = f.dim();
  const auto& p = cone.polytope;

  Exponent w(n, 0);
  for (int h : p.face(p.vertex_face(cone.vertex)).facets) {
    Exponent nu = p.facets()[h].normal;
    for (auto& x : nu) x = -x;
    for (std::size_t k = 0; k < n; ++k) w[k] += nu[k];
    cone.inner_normals.push_back(std::move(nu));
  }
  cone.weight.w = w;
  cone.weight.min_step = 0;
  for (const auto& m : f.support()) {
    if (m == vertex) continue;
    std::int64_t step = cone.weight(minus(m, vertex));
    if (step <= 0) throw ConsistencyError("weight functional is not positive on the vertex cone");
    if (cone.weight.min_step == 0 || step < cone.weight.min_step) cone.weight.min_step = step;
  }
  if (cone.weight.min_step == 0) cone.weight.min_step = 1;

  if (!p.is_full_dimensional()) {
    Matrix<Rational> diffs;
    for (const auto& v : p.vertices()) {
      std::vector<Rational> row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = v[k] - vertex[k];
      diffs.push_back(std::move(row));
    }
    for (const auto& eta : nullspace(std::move(diffs), n)) {
      cone.span_normals.push_back(primitive_integer_vector(eta));
    }
  }
  return cone;
}

} // namespace

WeightFunctional vertex_weight(const LaurentPolynomial& f, const Exponent& vertex) {
  return vertex_cone(f, vertex).weight;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t n, WeightFunctional weight, std::int64_t bound)
    : n_(n), weight_(std::move(weight)), bound_(bound) {
  if (weight_.w.size() != n) throw DimensionError("weight functional has wrong dimension");
  if (bound < 0) throw PreconditionError("truncation bound must be nonnegative");
  if (weight_.min_step <= 0) throw PreconditionError("weight step must be positive");
}

TruncatedSeries TruncatedSeries::from_polynomial(const LaurentPolynomial& p, WeightFunctional weight,
                                                 std::int64_t bound) {
  TruncatedSeries s(p.dim(), std::move(weight), bound);
  for (const auto& [e, c] : p.terms()) s.add_term(e, c);
  return s;
}

Rational TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw DimensionError("series term has wrong dimension");
  const std::int64_t wt = weight_(e);
  if (wt < 0) throw PreconditionError("series term has negative weight");
  if (wt > bound_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (n_ != other.n_) throw DimensionError("series of different dimensions");
  if (weight_.w != other.weight_.w) throw PreconditionError("series with different weights");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  check_compatible(other);
  TruncatedSeries out(n_, weight_, std::min(bound_, other.bound_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  return *this + other.scaled(Rational(-1));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  check_compatible(other);
  TruncatedSeries out(n_, weight_, std::min(bound_, other.bound_));
  std::vector<std::pair<std::int64_t, const LaurentPolynomial::TermMap::value_type*>> right;
  for (const auto& t : other.terms_) right.emplace_back(weight_(t.first), &t);
  std::sort(right.begin(), right.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Exponent e(n_);
  for (const auto& [ea, ca] : terms_) {
    const std::int64_t wa = weight_(ea);
    for (const auto& [wb, term] : right) {
      if (wa + wb > out.bound_) break;
      for (std::size_t i = 0; i < n_; ++i) e[i] = ea[i] + term->first[i];
      out.add_term(e, ca * term->second);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries out(n_, weight_, bound_);
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

TruncatedSeries TruncatedSeries::log_derivative(std::size_t i) const {
  if (i >= n_) throw DimensionError("variable index out of range");
  TruncatedSeries out(n_, weight_, bound_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != 0) out.terms_.emplace(e, c * e[i]);
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Exponent zero(n_, 0);
  const Rational c0 = coefficient(zero);
  if (c0 == 0) throw PreconditionError("series without constant term is not invertible");
  TruncatedSeries h(n_, weight_, bound_);
  for (const auto& [e, c] : terms_) {
    if (e == zero) continue;
    if (weight_(e) == 0) throw PreconditionError("weight is not positive on the series support");
    h.add_term(e, -c / c0);
  }
  TruncatedSeries acc(n_, weight_, bound_);
  acc.add_term(zero, Rational(1));
  TruncatedSeries power = acc;
  while (true) {
    power = power * h;
    if (power.terms_.empty()) break;
    acc = acc + power;
  }
  return acc.scaled(1 / c0);
}

TruncatedSeries TruncatedSeries::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  TruncatedSeries acc(n_, weight_, bound_);
  acc.add_term(Exponent(n_, 0), Rational(1));
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t bound) const {
  if (bound > bound_) throw PreconditionError("cannot extend a truncated series");
  TruncatedSeries out(n_, weight_, bound);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

// ---------------------------------------------------------------------------

TruncatedSeries truncated_inverse(const LaurentPolynomial& f, const Exponent& vertex,
                                  std::int64_t bound) {
  VertexCone cone = vertex_cone(f, vertex);
  Exponent back(vertex.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = -vertex[i];
  LaurentPolynomial normalized = f.shifted(back);
  normalized *= 1 / cone.lead;
  return TruncatedSeries::from_polynomial(normalized, cone.weight, bound).inverse();
}

std::int64_t residue_bound(const LaurentPolynomial& g, const LaurentPolynomial& f,
                           const Exponent& vertex) {
  WeightFunctional w = vertex_weight(f, vertex);
  std::int64_t bound = 0;
  for (const auto& u : g.support()) bound = std::max(bound, -w(minus(u, vertex)));
  return bound;
}

namespace {

class InverseCoefficients {
public:
  InverseCoefficients(const LaurentPolynomial& f, const Exponent& vertex)
      : cone_(vertex_cone(f, vertex)) {
    for (const auto& [m, c] : f.terms()) {
      if (m == vertex) continue;
      steps_.emplace_back(minus(m, vertex), -c / cone_.lead);
    }
  }

  const Rational& lead() const { return cone_.lead; }

  Rational operator()(const Exponent& x) {
    if (!cone_.contains(x)) return Rational(0);
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    Rational s(0);
    if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) s = 1;
    for (const auto& [d, h] : steps_) {
      Rational below = (*this)(minus(x, d));
      if (below != 0) s += h * below;
    }
    memo_.emplace(x, s);
    return s;
  }

private:
  VertexCone cone_;
  std::vector<std::pair<Exponent, Rational>> steps_;
  std::map<Exponent, Rational> memo_;
};

} // namespace

Rational residue_at_vertex(const LaurentPolynomial& g, const LaurentPolynomial& f,
                           const Exponent& vertex) {
  if (g.dim() != f.dim()) throw DimensionError("residue of polynomials of different dimension");
  InverseCoefficients series(f, vertex);
  Rational total(0);
  for (const auto& [u, c] : g.terms()) total += c * series(minus(vertex, u));
  return total / series.lead();
}

Rational residue_at_vertex_truncated(const LaurentPolynomial& g, const LaurentPolynomial& f,
                                     const Exponent& vertex, std::int64_t bound) {
  if (g.dim() != f.dim()) throw DimensionError("residue of polynomials of different dimension");
  TruncatedSeries s = truncated_inverse(f, vertex, bound);
  Rational total(0);
  for (const auto& [u, c] : g.terms()) {
    Exponent x = minus(vertex, u);
    if (s.weight()(x) < 0) continue;
    total += c * s.coefficient(x);
  }
  return total / f.coefficient(vertex);
}

Rational log_form_residue(const LaurentPolynomial& f0, std::span<const LaurentPolynomial> system,
                          const Exponent& vertex) {
  LaurentPolynomial jac = toric_jacobian(system);
  return residue_at_vertex(laurent_mul(f0, jac), product(system), vertex);
}

// ---------------------------------------------------------------------------

namespace {

TruncatedSeries series_determinant(const std::vector<std::vector<TruncatedSeries>>& m,
                                   const TruncatedSeries& zero) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  TruncatedSeries det = zero;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    TruncatedSeries term = m[0][perm[0]];
    for (std::size_t i = 1; i < n && !term.terms().empty(); ++i) term = term * m[i][perm[i]];
    det = det + (sign > 0 ? term : term.scaled(Rational(-1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Rational residue_at_bound(const TruncatedSeries& prefactor, std::span<const LogUnit> units,
                          std::span<const std::int64_t> m, std::int64_t bound) {
  const std::size_t n = units.size();
  const WeightFunctional& w = units[0].unit.weight();
  Exponent shift(n, 0);
  Rational coeff(1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t e = 1 - m[i];
    for (std::size_t k = 0; k < n; ++k) shift[k] += units[i].lead.exp[k] * e;
    coeff *= rational_pow(units[i].lead.coeff, Integer(e));
  }
  Exponent target(n);
  for (std::size_t k = 0; k < n; ++k) target[k] = -shift[k];
  const std::int64_t needed = w(target);
  if (needed < 0) return Rational(0);
  if (needed > bound) {
    throw PreconditionError("truncation bound " + std::to_string(bound) +
                            " is below the weight " + std::to_string(needed) +
                            " of the constant term");
  }

  TruncatedSeries one(n, w, bound);
  one.add_term(Exponent(n, 0), Rational(1));
  std::vector<TruncatedSeries> u;
  for (const auto& lu : units) u.push_back(lu.unit.truncated(bound));

  std::vector<std::vector<TruncatedSeries>> jac(n, std::vector<TruncatedSeries>(n, one));
  for (std::size_t i = 0; i < n; ++i) {
    TruncatedSeries inv = u[i].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      TruncatedSeries entry = u[i].log_derivative(j) * inv;
      entry.add_term(Exponent(n, 0), Rational(units[i].lead.exp[j]));
      jac[i][j] = std::move(entry);
    }
  }
  TruncatedSeries q = prefactor.truncated(bound) * series_determinant(jac, TruncatedSeries(n, w, bound));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] != 1) q = q * u[i].pow(1 - m[i]);
  }
  return coeff * q.coefficient(target);
}

} // namespace

Rational toroidal_residue(const TruncatedSeries& prefactor, std::span<const LogUnit> units,
                          std::span<const std::int64_t> m, std::optional<std::int64_t> bound) {
  const std::size_t n = units.size();
  if (n == 0 || m.size() != n) throw DimensionError("need n units and n exponents");
  const WeightFunctional& w = units[0].unit.weight();
  for (const auto& lu : units) {
    if (lu.lead.dim() != n || lu.unit.dim() != n) throw DimensionError("unit has wrong dimension");
    if (lu.unit.weight().w != w.w) throw PreconditionError("units must share a weight functional");
    if (lu.unit.constant_term() != 1) throw PreconditionError("unit series must have constant term 1");
  }
  if (prefactor.dim() != n || prefactor.weight().w != w.w) {
    throw PreconditionError("prefactor must share the units' weight functional");
  }
  const std::int64_t b = bound.value_or(8 * w.min_step);
  for (const auto& lu : units) {
    if (lu.unit.bound() < 2 * b) throw PreconditionError("unit series truncated below twice the bound");
  }
  if (prefactor.bound() < 2 * b) throw PreconditionError("prefactor truncated below twice the bound");

  Rational first = residue_at_bound(prefactor, units, m, b);
  Rational second = residue_at_bound(prefactor, units, m, 2 * b);
  if (first != second) throw PreconditionError("residue is not stable under doubling the bound");
  return first;
}

Rational wedge_log_residue(std::span<const LogUnit> units, std::span<const std::int64_t> m,
                           std::optional<std::int64_t> bound) {
  if (units.empty()) throw DimensionError("need at least one unit");
  const WeightFunctional& w = units[0].unit.weight();
  const std::int64_t b = bound.value_or(8 * w.min_step);
  TruncatedSeries one(units.size(), w, 2 * b);
  one.add_term(Exponent(units.size(), 0), Rational(1));
  return toroidal_residue(one, units, m, b);
}

Rational parshin_residue_at_flag(const LaurentPolynomial& f0,
                                 std::span<const LaurentPolynomial> system,
                                 const MinkowskiSystem& ms, const Flag& flag) {
  const Polytope& total = ms.total();
  const int sign = flag_sign(total, flag);
  const auto& vs = total.face(flag.vertex_face()).vertices;
  Exponent vertex = to_exponent(total.vertices()[vs.at(0)]);
  Rational r = log_form_residue(f0, system, vertex);
  return sign > 0 ? r : Rational(-r);
}

} // namespace vieta
