#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>

#include <Eigen/Dense>

#include "vieta/errors.hpp"
#include "vieta/oracles.hpp"

namespace vieta {

namespace {

using cld = std::complex<long double>;

// Bivariate polynomial with nonnegative exponents: (i, j) -> coefficient of
// t1^i t2^j.
using Poly2 = std::map<std::pair<std::int64_t, std::int64_t>, Rational>;

Poly2 clear_denominators(const LaurentPolynomial& f, bool swap) {
  std::int64_t lo1 = 0, lo2 = 0;
  bool first = true;
  for (const auto& e : f.support()) {
    lo1 = first ? e[0] : std::min(lo1, e[0]);
    lo2 = first ? e[1] : std::min(lo2, e[1]);
    first = false;
  }
  Poly2 out;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t i = e[0] - lo1, j = e[1] - lo2;
    if (swap) std::swap(i, j);
    out[{i, j}] = c;
  }
  return out;
}

std::int64_t degree_in(const Poly2& p, int var) {
  std::int64_t d = 0;
  for (const auto& [ij, c] : p) d = std::max(d, var == 0 ? ij.first : ij.second);
  return d;
}

// Coefficients in t2 of p at a rational t1.
std::vector<Rational> coefficients_at(const Poly2& p, const Rational& x, std::int64_t deg2) {
  std::vector<Rational> out(static_cast<std::size_t>(deg2) + 1, Rational(0));
  for (const auto& [ij, c] : p) out[static_cast<std::size_t>(ij.second)] += c * rational_pow(x, ij.first);
  return out;
}

std::vector<cld> coefficients_at(const Poly2& p, const cld& x, std::int64_t deg2) {
  std::vector<cld> out(static_cast<std::size_t>(deg2) + 1, cld(0));
  for (const auto& [ij, c] : p) {
    out[static_cast<std::size_t>(ij.second)] +=
        static_cast<long double>(c.convert_to<double>()) * std::pow(x, static_cast<int>(ij.first));
  }
  return out;
}

Rational sylvester_det(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t size = da + db;
  Matrix<Rational> m(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t k = 0; k <= da; ++k) m[r][r + k] = a[da - k];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t k = 0; k <= db; ++k) m[db + r][r + k] = b[db - k];
  }
  return determinant(std::move(m));
}

// Monomial coefficients of the polynomial through (x_k, y_k).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      ys[k] = (ys[k] - ys[k - 1]) / (xs[k] - xs[k - level]);
    }
  }
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (x - xs[k]) + ys[k]
    for (std::size_t i = n - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - xs[k] * coeffs[i];
    coeffs[0] = -xs[k] * coeffs[0];
    coeffs[0] += ys[k];
  }
  return coeffs;
}

// Roots of sum_i c_i x^i by companion-matrix eigenvalues, after scaling x so
// the roots have magnitude near 1.
std::vector<cld> polynomial_roots(std::vector<cld> c) {
  while (!c.empty() && std::abs(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t d = c.size() - 1;
  long double scale = std::pow(std::abs(c[0] / c[d]), 1.0L / static_cast<long double>(d));
  if (!(scale > 0) || !std::isfinite(static_cast<double>(scale))) scale = 1;
  std::vector<cld> monic(d);
  for (std::size_t i = 0; i < d; ++i) {
    monic[i] = c[i] / c[d] / std::pow(cld(scale), static_cast<int>(d - i));
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) =
        std::complex<double>(-monic[i]);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw IllConditioned("companion eigenvalue solver failed");
  std::vector<cld> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    roots.push_back(cld(solver.eigenvalues()(i)) * scale);
  }
  return roots;
}

struct Evaluator {
  LaurentPolynomial f;
  LaurentPolynomial d1, d2; // t_i d f / d t_i

  explicit Evaluator(const LaurentPolynomial& p)
      : f(p), d1(p.log_derivative(0)), d2(p.log_derivative(1)) {}

  static cld eval(const LaurentPolynomial& p, const cld* x) {
    return laurent_eval<cld>(p, std::span<const cld>(x, 2));
  }

  // |f(x)| relative to the sum of the absolute values of its terms.
  long double scaled_residual(const cld* x) const {
    long double size = 0;
    for (const auto& [e, c] : f.terms()) {
      size += std::abs(static_cast<long double>(c.convert_to<double>())) *
              std::pow(std::abs(x[0]), static_cast<long double>(e[0])) *
              std::pow(std::abs(x[1]), static_cast<long double>(e[1]));
    }
    return size == 0 ? 0 : std::abs(eval(f, x)) / size;
  }
};

bool polish(const Evaluator& a, const Evaluator& b, cld* x) {
  for (int iter = 0; iter < 60; ++iter) {
    if (x[0] == cld(0) || x[1] == cld(0)) return false;
    cld fa = Evaluator::eval(a.f, x), fb = Evaluator::eval(b.f, x);
    cld j11 = Evaluator::eval(a.d1, x) / x[0], j12 = Evaluator::eval(a.d2, x) / x[1];
    cld j21 = Evaluator::eval(b.d1, x) / x[0], j22 = Evaluator::eval(b.d2, x) / x[1];
    cld det = j11 * j22 - j12 * j21;
    if (std::abs(det) == 0) return false;
    cld s0 = (fa * j22 - fb * j12) / det;
    cld s1 = (j11 * fb - j21 * fa) / det;
    x[0] -= s0;
    x[1] -= s1;
    long double size = std::abs(x[0]) + std::abs(x[1]);
    if (std::abs(s0) + std::abs(s1) <= 1e-17L * size) return true;
  }
  return true;
}

long double relative_distance(const cld* x, const cld* y) {
  long double num = std::abs(x[0] - y[0]) + std::abs(x[1] - y[1]);
  long double den = std::abs(x[0]) + std::abs(x[1]) + std::abs(y[0]) + std::abs(y[1]);
  return num / den;
}

} // namespace

double numeric_bivariate_aggregate(std::span<const LaurentPolynomial> system,
                                   const LaurentPolynomial& f0, Aggregate mode,
                                   const NumericOptions& opts) {
  if (system.size() != 2 || system[0].dim() != 2 || system[1].dim() != 2 || f0.dim() != 2) {
    throw DimensionError("bivariate oracle needs two polynomials in two variables");
  }
  if (mode == Aggregate::product && f0.is_zero()) return 0.0;

  // Arrange that, if either polynomial misses a variable, it is the first one
  // and the missing variable is t2.
  std::size_t first = 0;
  bool swap = false;
  for (std::size_t k = 0; k < 2; ++k) {
    Poly2 p = clear_denominators(system[k], false);
    if (degree_in(p, 1) == 0) {
      first = k;
      break;
    }
    if (degree_in(p, 0) == 0) {
      first = k;
      swap = true;
      break;
    }
  }
  const Poly2 p1 = clear_denominators(system[first], swap);
  const Poly2 p2 = clear_denominators(system[1 - first], swap);
  const std::int64_t a1 = degree_in(p1, 0), b1 = degree_in(p1, 1);
  const std::int64_t a2 = degree_in(p2, 0), b2 = degree_in(p2, 1);
  if (b2 == 0) throw PreconditionError("system does not determine t2");

  // Candidate t1 values.
  std::vector<cld> t1_roots;
  if (b1 == 0) {
    std::vector<cld> uni(static_cast<std::size_t>(a1) + 1, cld(0));
    for (const auto& [ij, coef] : p1) uni[static_cast<std::size_t>(ij.first)] += static_cast<long double>(coef.convert_to<double>());
    t1_roots = polynomial_roots(uni);
  } else {
    const std::int64_t deg = b2 * a1 + b1 * a2;
    std::vector<Rational> xs, ys;
    for (std::int64_t k = 0; k <= deg; ++k) {
      Rational x(k + 1);
      xs.push_back(x);
      ys.push_back(sylvester_det(coefficients_at(p1, x, b1), coefficients_at(p2, x, b2)));
    }
    std::vector<Rational> r = interpolate(xs, ys);
    std::size_t low = 0;
    while (low < r.size() && r[low] == 0) ++low;
    if (low == r.size()) throw IllConditioned("resultant vanishes identically");
    std::vector<Rational> stripped(r.begin() + static_cast<std::ptrdiff_t>(low), r.end());
    while (stripped.back() == 0) stripped.pop_back();
    // Normalize exactly before converting so huge coefficients do not overflow.
    const Rational lead = stripped.back();
    std::vector<cld> c;
    for (const auto& q : stripped) c.emplace_back(static_cast<long double>((q / lead).convert_to<double>()));
    t1_roots = polynomial_roots(c);
  }

  for (std::size_t i = 0; i < t1_roots.size(); ++i) {
    for (std::size_t j = i + 1; j < t1_roots.size(); ++j) {
      long double gap = std::abs(t1_roots[i] - t1_roots[j]);
      if (gap <= opts.separation_tol * (std::abs(t1_roots[i]) + std::abs(t1_roots[j]))) {
        if (b1 != 0) throw IllConditioned("resultant roots are not separated");
      }
    }
  }

  const LaurentPolynomial& g1 = system[first];
  const LaurentPolynomial& g2 = system[1 - first];
  Evaluator e1(g1), e2(g2);
  std::vector<std::array<cld, 2>> roots;
  for (const auto& r1 : t1_roots) {
    if (std::abs(r1) <= opts.zero_tol) continue;
    // In the triangular case t2 comes from the second equation; otherwise
    // from the first, picking the candidate that fits the second best.
    const Poly2& source = b1 == 0 ? p2 : p1;
    const std::int64_t deg2 = b1 == 0 ? b2 : b1;
    std::vector<cld> candidates = polynomial_roots(coefficients_at(source, r1, deg2));
    auto make_point = [&](const cld& t2) {
      std::array<cld, 2> x{r1, t2};
      if (swap) std::swap(x[0], x[1]);
      return x;
    };
    if (b1 == 0) {
      for (const auto& t2 : candidates) {
        if (std::abs(t2) <= opts.zero_tol * (1 + std::abs(r1))) continue;
        roots.push_back(make_point(t2));
      }
      continue;
    }
    long double best = -1;
    std::array<cld, 2> pick{};
    for (const auto& t2 : candidates) {
      if (std::abs(t2) <= opts.zero_tol * (1 + std::abs(r1))) continue;
      auto x = make_point(t2);
      long double res = e2.scaled_residual(x.data());
      if (best < 0 || res < best) {
        best = res;
        pick = x;
      }
    }
    if (best < 0) throw IllConditioned("resultant root without a torus partner");
    roots.push_back(pick);
  }

  std::vector<std::array<cld, 2>> accepted;
  for (auto& x : roots) {
    if (!polish(e1, e2, x.data())) throw IllConditioned("Newton polishing failed");
    const long double res = std::max(e1.scaled_residual(x.data()), e2.scaled_residual(x.data()));
    const long double size = std::abs(x[0]) + std::abs(x[1]);
    if (std::abs(x[0]) <= opts.zero_tol * size || std::abs(x[1]) <= opts.zero_tol * size) {
      throw IllConditioned("root approaches a coordinate hyperplane");
    }
    if (res > opts.residual_tol) throw IllConditioned("root residual too large after polishing");
    accepted.push_back(x);
  }
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    for (std::size_t j = i + 1; j < accepted.size(); ++j) {
      if (relative_distance(accepted[i].data(), accepted[j].data()) <= opts.separation_tol) {
        throw IllConditioned("roots are not separated");
      }
    }
  }

  cld value = mode == Aggregate::product ? cld(1) : cld(0);
  long double magnitude = 0;
  for (const auto& x : accepted) {
    cld v = Evaluator::eval(f0, x.data());
    magnitude += std::abs(v);
    if (mode == Aggregate::product) {
      value *= v;
    } else {
      value += v;
    }
  }
  if (mode == Aggregate::sum && accepted.size() > 0 && std::abs(value) < 1e-6L * magnitude) {
    throw IllConditioned("sum of root values cancels");
  }
  if (std::abs(value.imag()) > 1e-7L * (std::abs(value.real()) + 1e-30L)) {
    throw IllConditioned("aggregate is not real");
  }
  return static_cast<double>(value.real());
}

} // namespace vieta
