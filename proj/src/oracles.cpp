#include "vieta/oracles.hpp"

#include <algorithm>
#include <map>

#include "vieta/errors.hpp"

namespace vieta {

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

Matrix<Integer> identity(std::size_t n) {
  Matrix<Integer> m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Keeps A = U S V while S is reduced by row and column operations.
struct SnfState {
  Matrix<Integer> U, S, V;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(S[i], S[j]);
    for (auto& row : U) std::swap(row[i], row[j]);
  }
  // row i += k row j
  void row_add(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < S.size(); ++c) S[i][c] += k * S[j][c];
    for (auto& row : U) row[j] -= k * row[i];
  }
  void row_negate(std::size_t i) {
    for (auto& x : S[i]) x = -x;
    for (auto& row : U) row[i] = -row[i];
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : S) std::swap(row[i], row[j]);
    std::swap(V[i], V[j]);
  }
  // column i += k column j
  void col_add(std::size_t i, std::size_t j, const Integer& k) {
    for (auto& row : S) row[i] += k * row[j];
    for (std::size_t c = 0; c < V.size(); ++c) V[j][c] -= k * V[i][c];
  }
};

} // namespace

Matrix<Integer> multiply(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) {
    throw DimensionError("matrix product of incompatible shapes");
  }
  Matrix<Integer> out(a.size(), std::vector<Integer>(b.front().size(), Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

SNFResult smith_normal_form(const Matrix<Integer>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw DimensionError("Smith normal form of an empty matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("Smith normal form needs a square matrix");
  }
  if (determinant(a) == 0) throw PreconditionError("Smith normal form of a singular matrix");

  SnfState st{identity(n), a, identity(n)};
  auto& s = st.S;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (s[i][j] == 0) continue;
          if (pr == n || abs(s[i][j]) < abs(s[pr][pc])) {
            pr = i;
            pc = j;
          }
        }
      }
      st.row_swap(t, pr);
      st.col_swap(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (s[i][t] == 0) continue;
        st.row_add(i, t, Integer(-(s[i][t] / s[t][t])));
        if (s[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s[t][j] == 0) continue;
        st.col_add(j, t, Integer(-(s[t][j] / s[t][t])));
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t i = t + 1; i < n && clean; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s[i][j] % s[t][t] != 0) {
            st.row_add(t, i, Integer(1));
            clean = false;
            break;
          }
        }
      }
      if (clean) break;
    }
    if (s[t][t] < 0) st.row_negate(t);
  }
  return SNFResult{std::move(st.U), std::move(st.S), std::move(st.V)};
}

SNFResult smith_normal_form(const IntMatrix& a) {
  Matrix<Integer> big(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) big[i].assign(a[i].begin(), a[i].end());
  return smith_normal_form(big);
}

// ---------------------------------------------------------------------------
// Binomial systems

namespace {

Matrix<Integer> unimodular_inverse(const Matrix<Integer>& m) {
  const std::size_t n = m.size();
  Matrix<Rational> aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw ConsistencyError("unimodular matrix is singular");
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  Matrix<Integer> out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = aug[i][n + j];
      if (denominator(x) != 1) throw ConsistencyError("inverse of a unimodular matrix is not integral");
      out[i][j] = numerator(x);
    }
  }
  return out;
}

} // namespace

Rational binomial_aggregate(const IntMatrix& a, std::span<const Rational> d, const Monomial& f0,
                            Aggregate mode) {
  const std::size_t n = a.size();
  if (d.size() != n || f0.dim() != n) throw DimensionError("binomial system shapes disagree");
  for (const auto& x : d) {
    if (x == 0) throw PreconditionError("binomial right-hand side must be nonzero");
  }
  SNFResult snf = smith_normal_form(a);
  const Matrix<Integer> u_inv = unimodular_inverse(snf.U);
  const Matrix<Integer> v_inv = unimodular_inverse(snf.V);

  // z = t^V solves z_j^{s_j} = e_j with e = d^{U^{-1}}; f0 = c z^p, p = m V^{-1}.
  std::vector<Rational> e(n, Rational(1));
  std::vector<Integer> p(n, Integer(0));
  Integer roots(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i] *= rational_pow(d[j], u_inv[i][j]);
    for (std::size_t k = 0; k < n; ++k) p[i] += Integer(f0.exp[k]) * v_inv[k][i];
    roots *= snf.S[i][i];
  }

  if (mode == Aggregate::product) {
    Rational out = rational_pow(f0.coeff, roots);
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& s = snf.S[j][j];
      // Product of the s-th roots of e is (-1)^{s+1} e.
      Rational root_product = (s % 2 == 0) ? Rational(-e[j]) : e[j];
      out *= rational_pow(root_product, p[j] * (roots / s));
    }
    return out;
  }

  Rational out = f0.coeff;
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& s = snf.S[j][j];
    // Sum of z^p over the s-th roots of e vanishes unless s divides p.
    if (p[j] % s != 0) return Rational(0);
    out *= Rational(s) * rational_pow(e[j], p[j] / s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Univariate systems

namespace {

// Power sums p_1..p_count of the roots of sum_i a_i x^i (a_0, a_top nonzero).
std::vector<Rational> power_sums(const std::vector<Rational>& a, std::size_t count) {
  const std::size_t d = a.size() - 1;
  std::vector<Rational> b(d + 1);
  for (std::size_t i = 0; i <= d; ++i) b[i] = a[i] / a[d];
  std::vector<Rational> p(count + 1, Rational(0));
  p[0] = static_cast<long>(d);
  for (std::size_t k = 1; k <= count; ++k) {
    Rational s(0);
    for (std::size_t i = 1; i < k && i <= d; ++i) s += b[d - i] * p[k - i];
    if (k <= d) s += static_cast<long>(k) * b[d - k];
    p[k] = -s;
  }
  return p;
}

} // namespace

Rational univariate_aggregate(const LaurentPolynomial& f1, const LaurentPolynomial& f0,
                              Aggregate mode) {
  if (f1.dim() != 1 || f0.dim() != 1) throw DimensionError("univariate oracle needs n = 1");
  if (f1.is_zero() || f1.is_monomial()) throw PreconditionError("f1 must have at least two terms");
  const auto& terms = f1.terms();
  const std::int64_t kmin = terms.begin()->first[0];
  const std::int64_t kmax = terms.rbegin()->first[0];
  const std::int64_t d = kmax - kmin;
  const Rational lo = terms.begin()->second;
  const Rational hi = terms.rbegin()->second;

  if (mode == Aggregate::product) {
    if (!f0.is_monomial()) throw PreconditionError("product oracle needs a monomial f0");
    Monomial m = f0.as_monomial();
    Rational root_product = (d % 2 == 0 ? lo : Rational(-lo)) / hi;
    return rational_pow(m.coeff, Integer(d)) * rational_pow(root_product, Integer(m.exp[0]));
  }

  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e[0] - kmin)] = c;
  std::int64_t top = 0, bottom = 0;
  for (const auto& e : f0.support()) {
    top = std::max(top, e[0]);
    bottom = std::min(bottom, e[0]);
  }
  std::vector<Rational> pos = power_sums(coeffs, static_cast<std::size_t>(top));
  std::vector<Rational> reversed(coeffs.rbegin(), coeffs.rend());
  std::vector<Rational> neg = power_sums(reversed, static_cast<std::size_t>(-bottom));
  Rational total(0);
  for (const auto& [e, c] : f0.terms()) {
    total += c * (e[0] >= 0 ? pos[static_cast<std::size_t>(e[0])]
                            : neg[static_cast<std::size_t>(-e[0])]);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Homology degree

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// Kernel of a sparse matrix with `cols` columns, one vector per free column.
std::vector<std::vector<Rational>> sparse_kernel(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::map<std::size_t, SparseRow> pivots; // leading column -> row with leading entry 1
  for (SparseRow row : rows) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto hit = pivots.find(lead->first);
      if (hit == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [c, x] : row) x *= inv;
        pivots.emplace(lead->first, std::move(row));
        break;
      }
      Rational factor = lead->second;
      for (const auto& [c, x] : hit->second) {
        Rational& y = row[c];
        y -= factor * x;
        if (y == 0) row.erase(c);
      }
    }
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivots.count(free) != 0) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational s(0);
      for (const auto& [c, x] : it->second) {
        if (c != it->first) s += x * v[c];
      }
      v[it->first] = -s;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

struct FundamentalClass {
  std::vector<Flag> simplices;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<Rational> cycle; // oriented so that one chosen simplex has its flag sign
};

FundamentalClass fundamental_class(const PolyhedralComplex& x) {
  FundamentalClass fc;
  fc.simplices = x.flags();
  for (std::size_t i = 0; i < fc.simplices.size(); ++i) fc.index.emplace(fc.simplices[i].faces, i);

  std::vector<SparseRow> rows;
  if (x.dim() == 0) {
    SparseRow augmentation;
    for (std::size_t i = 0; i < fc.simplices.size(); ++i) augmentation[i] = 1;
    rows.push_back(std::move(augmentation));
  } else {
    std::map<std::vector<std::size_t>, std::size_t> facet_rows;
    for (std::size_t s = 0; s < fc.simplices.size(); ++s) {
      const auto& chain = fc.simplices[s].faces;
      for (std::size_t k = 0; k < chain.size(); ++k) {
        std::vector<std::size_t> face;
        for (std::size_t j = 0; j < chain.size(); ++j) {
          if (j != k) face.push_back(chain[j]);
        }
        auto [it, fresh] = facet_rows.try_emplace(std::move(face), rows.size());
        if (fresh) rows.emplace_back();
        rows[it->second][s] = (k % 2 == 0) ? 1 : -1;
      }
    }
  }
  auto kernel = sparse_kernel(rows, fc.simplices.size());
  if (kernel.size() != 1) {
    throw PreconditionError("top homology has rank " + std::to_string(kernel.size()) + ", not 1");
  }
  fc.cycle = std::move(kernel.front());
  for (std::size_t s = 0; s < fc.cycle.size(); ++s) {
    if (fc.cycle[s] == 0) continue;
    Rational scale = Rational(x.flag_sign(fc.simplices[s])) / fc.cycle[s];
    for (auto& c : fc.cycle) c *= scale;
    break;
  }
  return fc;
}

} // namespace

long degree_by_homology(const FaceMap& psi) {
  validate_face_map(psi);
  FundamentalClass src = fundamental_class(psi.source);
  FundamentalClass dst = fundamental_class(psi.target);

  std::vector<Rational> pushed(dst.simplices.size(), Rational(0));
  for (std::size_t s = 0; s < src.simplices.size(); ++s) {
    if (src.cycle[s] == 0) continue;
    std::vector<std::size_t> image;
    bool degenerate = false;
    for (auto c : src.simplices[s].faces) {
      std::size_t y = psi.image[c];
      if (!image.empty() && image.back() == y) {
        degenerate = true;
        break;
      }
      image.push_back(y);
    }
    if (degenerate) continue;
    auto it = dst.index.find(image);
    if (it == dst.index.end()) throw ConsistencyError("image of a top simplex is not a top simplex");
    pushed[it->second] += src.cycle[s];
  }

  std::size_t ref = 0;
  while (dst.cycle[ref] == 0) ++ref;
  const Rational degree = pushed[ref] / dst.cycle[ref];
  for (std::size_t s = 0; s < pushed.size(); ++s) {
    if (pushed[s] != degree * dst.cycle[s]) {
      throw ConsistencyError("pushed-forward cycle is not a multiple of the fundamental class");
    }
  }
  if (denominator(degree) != 1) throw ConsistencyError("non-integral map degree");
  return numerator(degree).convert_to<long>();
}

} // namespace vieta
