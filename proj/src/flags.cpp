#include "vieta/flags.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "vieta/errors.hpp"

namespace vieta {

bool is_complete_flag(const Polytope& p, const Flag& flag) {
  if (flag.faces.size() != static_cast<std::size_t>(p.dim()) + 1) return false;
  for (std::size_t i = 0; i < flag.faces.size(); ++i) {
    if (flag.faces[i] >= p.faces().size()) return false;
    if (p.face(flag.faces[i]).dim != static_cast<int>(i)) return false;
    if (i > 0 && !p.face_contains(flag.faces[i], flag.faces[i - 1])) return false;
  }
  return flag.faces.back() == p.improper_face();
}

namespace {

void extend_flags(const Polytope& p, std::vector<std::size_t>& chain, std::size_t stop_dim,
                  std::vector<Flag>& out) {
  if (static_cast<std::size_t>(p.face(chain.back()).dim) == stop_dim) {
    out.push_back(Flag{chain});
    return;
  }
  for (auto up : p.superfaces(chain.back())) {
    chain.push_back(up);
    extend_flags(p, chain, stop_dim, out);
    chain.pop_back();
  }
}

std::vector<Flag> chains_up_to(const Polytope& p, std::size_t stop_dim) {
  std::vector<Flag> out;
  for (auto v : p.faces_of_dim(0)) {
    std::vector<std::size_t> chain{v};
    extend_flags(p, chain, stop_dim, out);
  }
  return out;
}

} // namespace

std::vector<Flag> complete_flags(const Polytope& p) {
  if (!p.is_full_dimensional()) {
    throw PreconditionError("complete flags need a full-dimensional polytope");
  }
  return chains_up_to(p, p.ambient_dim());
}

int flag_sign(const Polytope& p, const Flag& flag) {
  if (!p.is_full_dimensional()) {
    throw PreconditionError("flag sign needs a full-dimensional polytope");
  }
  if (!is_complete_flag(p, flag)) throw PreconditionError("not a complete flag");
  const std::size_t n = p.ambient_dim();
  const Point& origin = p.vertices()[p.face(flag.faces[0]).vertices[0]];
  Matrix<Rational> frame(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    Point c = p.centroid(flag.faces[i]);
    for (std::size_t k = 0; k < n; ++k) frame[i - 1][k] = c[k] - origin[k];
  }
  Rational det = determinant(std::move(frame));
  if (det == 0) throw ConsistencyError("degenerate flag frame");
  return det > 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------

PolyhedralComplex::PolyhedralComplex(Polytope boundary_of) : polytope_(std::move(boundary_of)) {
  if (!polytope_.is_full_dimensional() || polytope_.dim() < 1) {
    throw PreconditionError("a boundary complex needs a full-dimensional polytope of dimension >= 1");
  }
}

const Face& PolyhedralComplex::cell(std::size_t i) const {
  if (i >= cell_count()) throw PreconditionError("cell index out of range");
  return polytope_.face(i);
}

bool PolyhedralComplex::is_flag(const Flag& flag) const {
  if (flag.faces.size() != static_cast<std::size_t>(dim()) + 1) return false;
  for (std::size_t i = 0; i < flag.faces.size(); ++i) {
    if (flag.faces[i] >= cell_count()) return false;
    if (polytope_.face(flag.faces[i]).dim != static_cast<int>(i)) return false;
    if (i > 0 && !polytope_.face_contains(flag.faces[i], flag.faces[i - 1])) return false;
  }
  return true;
}

std::vector<Flag> PolyhedralComplex::flags() const {
  return chains_up_to(polytope_, static_cast<std::size_t>(dim()));
}

int PolyhedralComplex::flag_sign(const Flag& flag) const {
  if (!is_flag(flag)) throw PreconditionError("not a complete flag of the complex");
  Flag extended = flag;
  extended.faces.push_back(polytope_.improper_face());
  return vieta::flag_sign(polytope_, extended);
}

// ---------------------------------------------------------------------------

void validate_face_map(const FaceMap& psi) {
  const auto& src = psi.source.polytope();
  const auto& dst = psi.target.polytope();
  if (src.ambient_dim() != dst.ambient_dim()) {
    throw DimensionError("face map between complexes of different dimension");
  }
  if (psi.image.size() != psi.source.cell_count()) {
    throw PreconditionError("face map must assign every source cell");
  }
  for (auto c : psi.image) {
    if (c >= psi.target.cell_count()) throw PreconditionError("face map image is not a cell");
  }
  for (std::size_t c = 0; c < psi.source.cell_count(); ++c) {
    for (auto sub : src.subfaces(c)) {
      if (!dst.face_contains(psi.image[c], psi.image[sub])) {
        throw PreconditionError("face map does not preserve inclusion");
      }
    }
  }
}

FaceMap identity_map(const PolyhedralComplex& x) {
  std::vector<std::size_t> image(x.cell_count());
  std::iota(image.begin(), image.end(), std::size_t{0});
  return FaceMap{x, x, std::move(image)};
}

FaceMap collapse_map(const PolyhedralComplex& x, std::size_t cell) {
  if (cell >= x.cell_count()) throw PreconditionError("collapse target is not a cell");
  std::vector<std::size_t> image(x.cell_count());
  for (std::size_t c = 0; c < image.size(); ++c) {
    image[c] = x.polytope().face_contains(cell, c) ? c : cell;
  }
  return FaceMap{x, x, std::move(image)};
}

FaceMap antipodal_map(const PolyhedralComplex& x) {
  const auto& p = x.polytope();
  const Point center = p.centroid(p.improper_face());
  std::vector<int> mirror(p.vertices().size());
  for (std::size_t v = 0; v < mirror.size(); ++v) {
    Point q(center.size());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = 2 * center[k] - p.vertices()[v][k];
    auto idx = p.vertex_index(q);
    if (!idx) throw PreconditionError("polytope is not centrally symmetric");
    mirror[v] = static_cast<int>(*idx);
  }
  std::vector<std::size_t> image(x.cell_count());
  for (std::size_t c = 0; c < image.size(); ++c) {
    std::vector<int> vs;
    for (int v : p.face(c).vertices) vs.push_back(mirror[v]);
    std::sort(vs.begin(), vs.end());
    auto f = p.find_face(vs);
    if (!f) throw ConsistencyError("mirror image of a face is not a face");
    image[c] = *f;
  }
  return FaceMap{x, x, std::move(image)};
}

namespace {

long count_preimage_flags(const FaceMap& psi, const Flag& ref, std::vector<std::size_t>& chain) {
  const std::size_t level = chain.size();
  if (level == ref.faces.size()) return psi.source.flag_sign(Flag{chain});
  long total = 0;
  const auto& src = psi.source.polytope();
  for (auto up : src.superfaces(chain.back())) {
    if (up >= psi.source.cell_count() || psi.image[up] != ref.faces[level]) continue;
    chain.push_back(up);
    total += count_preimage_flags(psi, ref, chain);
    chain.pop_back();
  }
  return total;
}

} // namespace

long degree_by_flags(const FaceMap& psi, const Flag& ref, Exec exec) {
  validate_face_map(psi);
  if (!psi.target.is_flag(ref)) throw PreconditionError("reference flag is not a complete flag");
  std::vector<std::size_t> starts;
  for (auto v : psi.source.polytope().faces_of_dim(0)) {
    if (psi.image[v] == ref.faces[0]) starts.push_back(v);
  }
  long total = 0;
  const long count = static_cast<long>(starts.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) {
      std::vector<std::size_t> chain{starts[i]};
      total += count_preimage_flags(psi, ref, chain);
    }
  } else {
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      std::vector<std::size_t> chain{starts[i]};
      total += count_preimage_flags(psi, ref, chain);
    }
  }
  return psi.target.flag_sign(ref) * total;
}

// ---------------------------------------------------------------------------

VertexCovering VertexCovering::permuted(const std::vector<int>& perm) const {
  if (perm.size() != n) throw DimensionError("permutation has wrong length");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (check[i] != static_cast<int>(i)) throw PreconditionError("not a permutation");
  }
  VertexCovering out;
  out.vertex = vertex;
  out.n = n;
  out.pieces.assign(n, {});
  for (const auto& [facet, ls] : labels) {
    std::vector<int> moved;
    for (int l : ls) moved.push_back(perm[l]);
    std::sort(moved.begin(), moved.end());
    out.labels[facet] = std::move(moved);
  }
  for (std::size_t i = 0; i < n; ++i) out.pieces[perm[i]] = pieces[i];
  return out;
}

VertexCovering vertex_covering(const MinkowskiSystem& ms, std::size_t vertex) {
  const Polytope& total = ms.total();
  if (!total.is_full_dimensional()) {
    throw PreconditionError("vertex covering needs a full-dimensional Minkowski sum");
  }
  if (vertex >= total.vertices().size()) throw PreconditionError("not a vertex of the total polytope");
  VertexCovering cov;
  cov.vertex = vertex;
  cov.n = ms.size();
  cov.pieces.assign(cov.n, {});
  for (int h : total.face(total.vertex_face(vertex)).facets) {
    auto face = total.find_face(total.facets()[h].vertices);
    if (!face) throw ConsistencyError("facet missing from the face lattice");
    std::vector<int> ls;
    for (std::size_t i = 0; i < cov.n; ++i) {
      if (ms.summand(i).face(ms.decomposition(*face)[i]).dim == 0) {
        ls.push_back(static_cast<int>(i));
        cov.pieces[i].push_back(static_cast<std::size_t>(h));
      }
    }
    cov.labels[static_cast<std::size_t>(h)] = std::move(ls);
  }
  return cov;
}

std::vector<int> signature(const Polytope& total, const VertexCovering& cov, std::size_t face) {
  const auto& vs = total.face(face).vertices;
  if (!std::binary_search(vs.begin(), vs.end(), static_cast<int>(cov.vertex))) {
    throw PreconditionError("face does not contain the covering vertex");
  }
  std::vector<int> sig;
  for (int h : total.face(face).facets) {
    auto it = cov.labels.find(static_cast<std::size_t>(h));
    if (it == cov.labels.end()) throw ConsistencyError("facet through the vertex has no label");
    sig.insert(sig.end(), it->second.begin(), it->second.end());
  }
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  return sig;
}

std::vector<int> signature(const MinkowskiSystem& ms, std::size_t vertex, std::size_t face) {
  return signature(ms.total(), vertex_covering(ms, vertex), face);
}

namespace {

std::vector<int> tail_range(std::size_t from, std::size_t n) {
  std::vector<int> r;
  for (std::size_t i = from; i < n; ++i) r.push_back(static_cast<int>(i));
  return r;
}

long count_signature_flags(const Polytope& total, const VertexCovering& cov,
                           std::vector<std::size_t>& chain) {
  const std::size_t level = chain.size();
  if (level == cov.n + 1) return flag_sign(total, Flag{chain});
  const std::vector<int> want = tail_range(level, cov.n);
  long sum = 0;
  for (auto up : total.superfaces(chain.back())) {
    if (signature(total, cov, up) != want) continue;
    chain.push_back(up);
    sum += count_signature_flags(total, cov, chain);
    chain.pop_back();
  }
  return sum;
}

} // namespace

long combinatorial_coefficient(const Polytope& total, const VertexCovering& cov) {
  if (total.ambient_dim() != cov.n) throw DimensionError("covering does not match the polytope");
  if (!total.is_full_dimensional()) {
    throw PreconditionError("combinatorial coefficient needs a full-dimensional polytope");
  }
  for (const auto& piece : cov.pieces) {
    if (piece.empty()) return 0;
  }
  std::vector<std::size_t> chain{total.vertex_face(cov.vertex)};
  if (signature(total, cov, chain[0]) != tail_range(0, cov.n)) return 0;
  return count_signature_flags(total, cov, chain);
}

long combinatorial_coefficient(const MinkowskiSystem& ms, std::size_t vertex) {
  if (!is_developed(ms.summands())) throw PreconditionError("system is not developed");
  return combinatorial_coefficient(ms.total(), vertex_covering(ms, vertex));
}

// ---------------------------------------------------------------------------

namespace {

Point simplex_vertex(std::size_t n, std::size_t j) {
  Point p(n, Rational(0));
  if (j > 0) p[j - 1] = 1;
  return p;
}

} // namespace

PolyhedralComplex simplex_boundary(std::size_t n) {
  if (n == 0) throw DimensionError("simplex boundary needs n >= 1");
  std::vector<Point> pts;
  for (std::size_t j = 0; j <= n; ++j) pts.push_back(simplex_vertex(n, j));
  return PolyhedralComplex(Polytope::hull(std::move(pts)));
}

Flag simplex_reference_flag(const PolyhedralComplex& simplex) {
  const auto& p = simplex.polytope();
  const std::size_t n = p.ambient_dim();
  Flag flag;
  std::vector<int> vs;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = p.vertex_index(simplex_vertex(n, i));
    if (!v) throw PreconditionError("not the standard simplex");
    vs.push_back(static_cast<int>(*v));
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    auto f = p.find_face(sorted);
    if (!f) throw ConsistencyError("simplex face missing");
    flag.faces.push_back(*f);
  }
  return flag;
}

FaceMap pyramid_covering_map(const Polytope& total, const VertexCovering& cov) {
  const std::size_t n = total.ambient_dim();
  if (cov.n != n) throw DimensionError("covering does not match the polytope");
  if (!total.is_full_dimensional()) {
    throw PreconditionError("pyramid map needs a full-dimensional polytope");
  }
  const std::size_t vf = total.vertex_face(cov.vertex);
  const Point& apex = total.vertices()[cov.vertex];

  Exponent u(n, 0);
  for (int h : total.face(vf).facets) {
    for (std::size_t k = 0; k < n; ++k) u[k] -= total.facets()[h].normal[k];
  }
  std::vector<Point> pts{apex};
  for (auto edge : total.superfaces(vf)) {
    for (int v : total.face(edge).vertices) {
      if (static_cast<std::size_t>(v) == cov.vertex) continue;
      Point r(n);
      Rational height(0);
      for (std::size_t k = 0; k < n; ++k) {
        r[k] = total.vertices()[v][k] - apex[k];
        height += r[k] * u[k];
      }
      if (height <= 0) throw ConsistencyError("edge direction leaves the vertex cone");
      for (std::size_t k = 0; k < n; ++k) r[k] = apex[k] + r[k] / height;
      pts.push_back(std::move(r));
    }
  }
  PolyhedralComplex pyramid(Polytope::hull(std::move(pts)));
  const Polytope& pp = pyramid.polytope();
  const int apex_index = static_cast<int>(*pp.vertex_index(apex));

  std::vector<std::vector<int>> facet_labels(pp.facets().size());
  for (std::size_t h = 0; h < pp.facets().size(); ++h) {
    const auto& f = pp.facets()[h];
    if (!std::binary_search(f.vertices.begin(), f.vertices.end(), apex_index)) {
      facet_labels[h] = {0};
      continue;
    }
    bool matched = false;
    for (int g : total.face(vf).facets) {
      if (total.facets()[g].normal != f.normal) continue;
      for (int l : cov.labels.at(static_cast<std::size_t>(g))) facet_labels[h].push_back(l + 1);
      matched = true;
      break;
    }
    if (!matched) throw ConsistencyError("pyramid facet does not match a facet of the cone");
  }

  PolyhedralComplex simplex = simplex_boundary(n);
  const Polytope& sp = simplex.polytope();
  std::vector<int> simplex_index(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    simplex_index[j] = static_cast<int>(*sp.vertex_index(simplex_vertex(n, j)));
  }

  std::vector<std::size_t> image(pyramid.cell_count());
  for (std::size_t c = 0; c < image.size(); ++c) {
    std::vector<bool> in_sig(n + 1, false);
    for (int h : pp.face(c).facets) {
      for (int l : facet_labels[h]) in_sig[l] = true;
    }
    std::vector<int> vs;
    for (std::size_t j = 0; j <= n; ++j) {
      if (!in_sig[j]) vs.push_back(simplex_index[j]);
    }
    std::sort(vs.begin(), vs.end());
    if (vs.empty() || vs.size() == n + 1) {
      throw ConsistencyError("pyramid cell has no image in the simplex boundary");
    }
    auto f = sp.find_face(vs);
    if (!f) throw ConsistencyError("simplex face missing");
    image[c] = *f;
  }
  return FaceMap{std::move(pyramid), std::move(simplex), std::move(image)};
}

FaceMap pyramid_covering_map(const MinkowskiSystem& ms, std::size_t vertex) {
  return pyramid_covering_map(ms.total(), vertex_covering(ms, vertex));
}

} // namespace vieta
