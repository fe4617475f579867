#include "vieta/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <map>
#include <set>

#include <omp.h>

#include "vieta/errors.hpp"

namespace vieta {

// ---------------------------------------------------------------------------
// Hyperplane kernel

namespace kernels {
namespace {

template <class Int>
Int small_det(const std::vector<std::vector<Int>>& m, std::vector<std::size_t>& cols,
              std::size_t row) {
  const std::size_t n = m.size() - row;
  if (n == 0) return Int(1);
  if (n == 1) return m[row][cols[0]];
  if (n == 2) {
    return m[row][cols[0]] * m[row + 1][cols[1]] - m[row][cols[1]] * m[row + 1][cols[0]];
  }
  Int total(0);
  for (std::size_t k = 0; k < n; ++k) {
    const Int& pivot = m[row][cols[k]];
    if (pivot == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) rest.push_back(cols[j]);
    }
    Int minor = small_det(m, rest, row + 1);
    if (k % 2 == 0) {
      total += pivot * minor;
    } else {
      total -= pivot * minor;
    }
  }
  return total;
}

template <class Int>
Int abs_int(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

inline std::int64_t gcd_int(std::int64_t a, std::int64_t b) { return gcd64(a, b); }
inline Integer gcd_int(const Integer& a, const Integer& b) { return gcd(a, b); }

inline std::int64_t to_int64(std::int64_t x) { return x; }
inline std::int64_t to_int64(const Integer& x) { return checked_int64(x); }

template <class Int>
void scan_from(const std::vector<std::vector<Int>>& pts, std::size_t first,
               std::vector<Hyperplane>& out) {
  const std::size_t k = pts.size();
  const std::size_t d = pts.front().size();
  const std::size_t rest = d - 1;
  if (first + rest >= k) return;

  std::vector<std::size_t> idx(rest);
  for (std::size_t j = 0; j < rest; ++j) idx[j] = first + 1 + j;

  std::vector<std::vector<Int>> rows(rest, std::vector<Int>(d));
  std::vector<Int> normal(d);
  std::vector<std::size_t> cols(d - 1);

  while (true) {
    for (std::size_t r = 0; r < rest; ++r) {
      for (std::size_t c = 0; c < d; ++c) rows[r][c] = pts[idx[r]][c] - pts[first][c];
    }
    bool nonzero = false;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != c) cols[w++] = j;
      }
      Int minor = small_det(rows, cols, 0);
      normal[c] = (c % 2 == 0) ? minor : Int(-minor);
      if (normal[c] != 0) nonzero = true;
    }
    if (nonzero) {
      Int offset(0);
      for (std::size_t c = 0; c < d; ++c) offset += normal[c] * pts[first][c];
      bool pos = false;
      bool neg = false;
      for (std::size_t q = 0; q < k && !(pos && neg); ++q) {
        Int s(0);
        for (std::size_t c = 0; c < d; ++c) s += normal[c] * pts[q][c];
        s -= offset;
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (!(pos && neg)) {
        Int g(0);
        for (const auto& x : normal) g = gcd_int(g, abs_int(x));
        Hyperplane h;
        h.normal.resize(d);
        const bool flip = pos;
        for (std::size_t c = 0; c < d; ++c) {
          Int v = normal[c] / g;
          h.normal[c] = to_int64(flip ? Int(-v) : v);
        }
        Int off = offset / g;
        h.offset = Integer(flip ? Int(-off) : off);
        out.push_back(std::move(h));
      }
    }
    // Next (d-1)-combination of {first+1, ..., k-1}.
    std::size_t pos = rest;
    while (pos > 0 && idx[pos - 1] == k - rest + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < rest; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class Int>
std::vector<Hyperplane> hyperplanes_impl(const std::vector<std::vector<Int>>& pts, Exec exec) {
  const std::size_t k = pts.size();
  const std::size_t d = pts.front().size();
  std::vector<Hyperplane> found;
  if (k < d) return found;
  const std::size_t last_first = k - d;

  if (exec == Exec::serial) {
    for (std::size_t first = 0; first <= last_first; ++first) scan_from(pts, first, found);
  } else {
    std::exception_ptr failure;
#pragma omp parallel
    {
      std::vector<Hyperplane> local;
#pragma omp for schedule(dynamic, 1) nowait
      for (std::size_t first = 0; first <= last_first; ++first) {
        try {
          scan_from(pts, first, local);
        } catch (...) {
#pragma omp critical(vieta_hull_error)
          failure = std::current_exception();
        }
      }
#pragma omp critical(vieta_hull_merge)
      found.insert(found.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

} // namespace

std::vector<Hyperplane> supporting_hyperplanes(const Matrix<Integer>& points, Exec exec) {
  if (points.empty() || points.front().empty()) {
    throw PreconditionError("supporting_hyperplanes needs a nonempty point set in dimension >= 1");
  }
  const std::size_t d = points.front().size();
  Integer max_abs(0);
  for (const auto& p : points) {
    if (p.size() != d) throw DimensionError("points of mixed dimension");
    for (const auto& x : p) max_abs = std::max(max_abs, Integer(abs(x)));
  }
  // Minors are bounded by (d-1)! (2M)^(d-1); the offset test adds a factor dM.
  double bits = std::log2(static_cast<double>(max_abs.convert_to<double>()) + 1.0);
  double bound = 0;
  for (std::size_t i = 2; i < d; ++i) bound += std::log2(static_cast<double>(i));
  bound += (d - 1) * (bits + 1) + std::log2(static_cast<double>(d)) + bits + 2;
  if (bound < 60) {
    std::vector<std::vector<std::int64_t>> small(points.size(), std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t c = 0; c < d; ++c) small[i][c] = points[i][c].convert_to<std::int64_t>();
    }
    return hyperplanes_impl(small, exec);
  }
  return hyperplanes_impl(points, exec);
}

} // namespace kernels

// ---------------------------------------------------------------------------
// Polytope

Point to_point(const Exponent& e) { return Point(e.begin(), e.end()); }

Exponent to_exponent(const Point& p) {
  Exponent e;
  e.reserve(p.size());
  for (const auto& x : p) {
    if (denominator(x) != 1) throw PreconditionError("point is not a lattice point");
    e.push_back(checked_int64(numerator(x)));
  }
  return e;
}

namespace {

std::size_t affine_rank(const std::vector<std::vector<Rational>>& pts, const std::vector<int>& which) {
  if (which.size() <= 1) return 0;
  Matrix<Rational> diffs;
  const auto& base = pts[which[0]];
  for (std::size_t i = 1; i < which.size(); ++i) {
    std::vector<Rational> row(base.size());
    for (std::size_t c = 0; c < base.size(); ++c) row[c] = pts[which[i]][c] - base[c];
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs));
}

} // namespace

Polytope Polytope::hull(std::vector<Point> points, Exec exec) {
  if (points.empty()) throw PreconditionError("convex hull of an empty point set");
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionError("convex hull: points of mixed dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope poly;
  poly.ambient_ = n;

  // Affine hull: pick coordinates that are independent on it.
  Matrix<Rational> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(row));
  }
  std::vector<std::size_t> coords = pivot_columns(diffs);
  const std::size_t d = coords.size();
  poly.dim_ = static_cast<int>(d);

  std::vector<int> vertex_ids;
  std::vector<kernels::Hyperplane> planes;
  std::vector<std::vector<int>> plane_vertices;

  if (d == 0) {
    vertex_ids.push_back(0);
  } else {
    Integer scale(1);
    for (const auto& p : points) {
      for (const auto& x : p) {
        Integer den = denominator(x);
        scale = scale / gcd(scale, den) * den;
      }
    }
    Matrix<Integer> projected(points.size(), std::vector<Integer>(d));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& x = points[i][coords[c]];
        projected[i][c] = numerator(x) * (scale / denominator(x));
      }
    }
    planes = kernels::supporting_hyperplanes(projected, exec);

    std::vector<std::vector<std::size_t>> incident(points.size());
    for (std::size_t h = 0; h < planes.size(); ++h) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        Integer s(0);
        for (std::size_t c = 0; c < d; ++c) s += planes[h].normal[c] * projected[i][c];
        if (s == planes[h].offset) incident[i].push_back(h);
      }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      Matrix<Rational> normals;
      for (auto h : incident[i]) {
        normals.emplace_back(planes[h].normal.begin(), planes[h].normal.end());
      }
      if (rank(std::move(normals)) == d) vertex_ids.push_back(static_cast<int>(i));
    }
    std::vector<int> new_index(points.size(), -1);
    for (std::size_t v = 0; v < vertex_ids.size(); ++v) new_index[vertex_ids[v]] = static_cast<int>(v);
    plane_vertices.resize(planes.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (new_index[i] < 0) continue;
      for (auto h : incident[i]) plane_vertices[h].push_back(new_index[i]);
    }
  }

  for (int id : vertex_ids) poly.vertices_.push_back(points[id]);

  for (std::size_t h = 0; h < planes.size(); ++h) {
    Facet f;
    f.normal.assign(n, 0);
    for (std::size_t c = 0; c < d; ++c) f.normal[coords[c]] = planes[h].normal[c];
    f.vertices = plane_vertices[h];
    f.offset = 0;
    for (std::size_t c = 0; c < n; ++c) f.offset += poly.vertices_[f.vertices[0]][c] * f.normal[c];
    poly.facets_.push_back(std::move(f));
  }
  std::sort(poly.facets_.begin(), poly.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

  // Face lattice: closure of the vertex set under intersection with facets.
  std::vector<int> all(poly.vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{all};
  std::deque<std::vector<int>> queue{all};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& f : poly.facets_) {
      std::vector<int> meet;
      std::set_intersection(cur.begin(), cur.end(), f.vertices.begin(), f.vertices.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == cur.size()) continue;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  for (const auto& vs : seen) {
    Face face;
    face.vertices = vs;
    face.dim = static_cast<int>(affine_rank(poly.vertices_, vs));
    if (vs.size() != all.size()) {
      for (std::size_t h = 0; h < poly.facets_.size(); ++h) {
        const auto& fv = poly.facets_[h].vertices;
        if (std::includes(fv.begin(), fv.end(), vs.begin(), vs.end())) {
          face.facets.push_back(static_cast<int>(h));
        }
      }
    }
    poly.faces_.push_back(std::move(face));
  }
  std::sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });

  poly.vertex_faces_.assign(poly.vertices_.size(), 0);
  for (std::size_t i = 0; i < poly.faces_.size(); ++i) {
    if (poly.faces_[i].dim == 0) poly.vertex_faces_[poly.faces_[i].vertices[0]] = i;
  }
  poly.down_.assign(poly.faces_.size(), {});
  poly.up_.assign(poly.faces_.size(), {});
  for (std::size_t i = 0; i < poly.faces_.size(); ++i) {
    for (std::size_t j = 0; j < poly.faces_.size(); ++j) {
      if (poly.faces_[j].dim + 1 != poly.faces_[i].dim) continue;
      if (poly.face_contains(i, j)) {
        poly.down_[i].push_back(j);
        poly.up_[j].push_back(i);
      }
    }
  }
  return poly;
}

std::optional<std::size_t> Polytope::vertex_index(const Point& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Polytope::find_face(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].vertices == vertices) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Polytope::faces_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == d) out.push_back(i);
  }
  return out;
}

std::vector<int> Polytope::maximizers(const Exponent& w) const {
  if (w.size() != ambient_) throw DimensionError("covector has wrong dimension");
  std::vector<Rational> values;
  values.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    Rational s(0);
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (w[c] != 0) s += v[c] * w[c];
    }
    values.push_back(std::move(s));
  }
  const Rational best = *std::max_element(values.begin(), values.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == best) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::size_t Polytope::face_of_covector(const Exponent& w) const {
  auto face = find_face(maximizers(w));
  if (!face) throw ConsistencyError("maximizer set is not a face of the lattice");
  return *face;
}

Exponent Polytope::interior_covector(std::size_t face) const {
  Exponent w(ambient_, 0);
  for (int h : faces_.at(face).facets) {
    for (std::size_t c = 0; c < ambient_; ++c) w[c] += facets_[h].normal[c];
  }
  return w;
}

bool Polytope::face_contains(std::size_t big, std::size_t small) const {
  const auto& b = faces_.at(big).vertices;
  const auto& s = faces_.at(small).vertices;
  return std::includes(b.begin(), b.end(), s.begin(), s.end());
}

Point Polytope::centroid(std::size_t face) const {
  const auto& vs = faces_.at(face).vertices;
  Point c(ambient_, Rational(0));
  for (int v : vs) {
    for (std::size_t i = 0; i < ambient_; ++i) c[i] += vertices_[v][i];
  }
  for (auto& x : c) x /= static_cast<long>(vs.size());
  return c;
}

Polytope convex_hull(std::vector<Point> points, Exec exec) {
  return Polytope::hull(std::move(points), exec);
}

Polytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no Newton polytope");
  std::vector<Point> pts;
  for (const auto& e : f.support()) pts.push_back(to_point(e));
  return Polytope::hull(std::move(pts));
}

Polytope minkowski_sum(std::span<const Polytope> summands, Exec exec) {
  if (summands.empty()) throw DimensionError("Minkowski sum of no polytopes");
  const std::size_t n = summands.front().ambient_dim();
  std::vector<Point> acc = summands.front().vertices();
  for (std::size_t i = 1; i < summands.size(); ++i) {
    if (summands[i].ambient_dim() != n) throw DimensionError("Minkowski sum: mixed dimensions");
    std::vector<Point> next;
    next.reserve(acc.size() * summands[i].vertices().size());
    for (const auto& a : acc) {
      for (const auto& b : summands[i].vertices()) {
        Point s(n);
        for (std::size_t c = 0; c < n; ++c) s[c] = a[c] + b[c];
        next.push_back(std::move(s));
      }
    }
    if (i + 1 == summands.size()) return Polytope::hull(std::move(next), exec);
    acc = Polytope::hull(std::move(next), exec).vertices();
  }
  return Polytope::hull(std::move(acc), exec);
}

// ---------------------------------------------------------------------------
// Minkowski systems

MinkowskiSystem::MinkowskiSystem(std::vector<Polytope> summands, Exec exec)
    : summands_(std::move(summands)), total_(minkowski_sum(summands_, exec)) {
  decomposition_.resize(total_.faces().size());
  for (std::size_t f = 0; f < total_.faces().size(); ++f) {
    Exponent w = total_.interior_covector(f);
    for (const auto& s : summands_) decomposition_[f].push_back(s.face_of_covector(w));
  }
  for (std::size_t v = 0; v < total_.vertices().size(); ++v) {
    Point sum(total_.ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      const Face& part = summands_[i].face(decomposition_[total_.vertex_face(v)][i]);
      if (part.dim != 0) throw ConsistencyError("vertex decomposes into a non-vertex face");
      const Point& p = summands_[i].vertices()[part.vertices[0]];
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += p[c];
    }
    if (sum != total_.vertices()[v]) throw ConsistencyError("vertex decomposition does not add up");
  }
}

std::vector<std::size_t> MinkowskiSystem::vertex_decomposition(std::size_t vertex) const {
  const auto& parts = decomposition(total_.vertex_face(vertex));
  std::vector<std::size_t> out;
  out.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.push_back(static_cast<std::size_t>(summands_[i].face(parts[i]).vertices.at(0)));
  }
  return out;
}

MinkowskiSystem minkowski_system(std::vector<Polytope> summands, Exec exec) {
  return MinkowskiSystem(std::move(summands), exec);
}

Developedness check_developed(std::span<const Polytope> summands) {
  if (summands.empty()) throw DimensionError("developedness of an empty collection");
  const std::size_t n = summands.front().ambient_dim();
  if (summands.size() != n) {
    throw DimensionError("developedness needs n polytopes in dimension n");
  }
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].ambient_dim() != n) throw DimensionError("developedness: mixed dimensions");
    if (summands[i].is_point()) {
      return {false, std::nullopt, "summand " + std::to_string(i + 1) + " is a point"};
    }
  }
  Polytope total = minkowski_sum(summands);
  if (!total.is_full_dimensional()) {
    Matrix<Rational> diffs;
    const auto& vs = total.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i) {
      std::vector<Rational> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = vs[i][c] - vs[0][c];
      diffs.push_back(std::move(row));
    }
    if (diffs.empty()) diffs.emplace_back(n, Rational(0));
    auto normals = nullspace(std::move(diffs), n);
    return {false, primitive_integer_vector(normals.front()),
            "Minkowski sum is not full-dimensional"};
  }
  // Faces of the total stand for the relative interiors of its normal cones,
  // on which every summand face is constant.
  std::optional<std::pair<int, Exponent>> worst;
  for (std::size_t f = 0; f < total.faces().size(); ++f) {
    if (f == total.improper_face()) continue;
    Exponent w = total.interior_covector(f);
    bool has_vertex = false;
    for (const auto& s : summands) {
      if (s.face(s.face_of_covector(w)).dim == 0) {
        has_vertex = true;
        break;
      }
    }
    if (has_vertex) continue;
    std::pair<int, Exponent> cand{total.face(f).dim, w};
    if (!worst || cand > *worst) worst = std::move(cand);
  }
  if (worst) return {false, worst->second, "no summand face is a vertex"};
  return {true, std::nullopt, ""};
}

bool is_developed(std::span<const Polytope> summands) {
  return check_developed(summands).developed;
}

namespace {

void pulling_triangulation(const Polytope& p, std::size_t face,
                           std::vector<std::vector<int>>& out, std::vector<int>& apexes) {
  const Face& f = p.face(face);
  if (f.dim == 0) {
    std::vector<int> simplex = apexes;
    simplex.push_back(f.vertices[0]);
    out.push_back(std::move(simplex));
    return;
  }
  const int apex = f.vertices[0];
  apexes.push_back(apex);
  for (auto sub : p.subfaces(face)) {
    const auto& sv = p.face(sub).vertices;
    if (std::binary_search(sv.begin(), sv.end(), apex)) continue;
    pulling_triangulation(p, sub, out, apexes);
  }
  apexes.pop_back();
}

} // namespace

Rational euclidean_volume(const Polytope& p) {
  if (!p.is_full_dimensional()) {
    throw PreconditionError("volume of a lower-dimensional polytope");
  }
  const std::size_t n = p.ambient_dim();
  std::vector<std::vector<int>> simplices;
  std::vector<int> apexes;
  pulling_triangulation(p, p.improper_face(), simplices, apexes);
  Rational total(0);
  for (const auto& s : simplices) {
    Matrix<Rational> m(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = p.vertices()[s[r + 1]][c] - p.vertices()[s[0]][c];
      }
    }
    total += abs(determinant(std::move(m)));
  }
  Integer fact(1);
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  return total / Rational(fact);
}

Integer mixed_volume_ie(std::span<const Polytope> summands) {
  const std::size_t n = summands.size();
  if (n == 0) throw DimensionError("mixed volume of no polytopes");
  for (const auto& s : summands) {
    if (s.ambient_dim() != n) throw DimensionError("mixed volume needs n polytopes in dimension n");
  }
  Rational total(0);
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<Polytope> part;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) part.push_back(summands[i]);
    }
    Polytope sum = minkowski_sum(part);
    if (!sum.is_full_dimensional()) continue;
    Rational vol = euclidean_volume(sum);
    if ((n - part.size()) % 2 == 0) {
      total += vol;
    } else {
      total -= vol;
    }
  }
  if (denominator(total) != 1) {
    throw ConsistencyError("mixed volume " + to_string(total) + " is not an integer");
  }
  return numerator(total);
}

} // namespace vieta
