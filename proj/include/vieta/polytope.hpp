#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vieta/kernels.hpp"
#include "vieta/laurent.hpp"
#include "vieta/rational.hpp"

namespace vieta {

using Point = std::vector<Rational>;

Point to_point(const Exponent& e);
// Throws PreconditionError unless every coordinate is an integer.
Exponent to_exponent(const Point& p);

struct Facet {
  // Primitive integer outer normal. For a lower-dimensional polytope this is a
  // relative facet and the normal lives in the coordinates spanning its affine
  // hull (zero elsewhere).
  Exponent normal;
  Rational offset; // max <normal, x> over the polytope
  std::vector<int> vertices;
};

struct Face {
  std::vector<int> vertices; // sorted vertex indices
  int dim = 0;
  std::vector<int> facets; // active facets (empty for the improper face)
};

// Exact convex polytope with its full face lattice (improper face included,
// empty face excluded). Vertices are sorted lexicographically; faces are
// sorted by (dimension, vertex list), so the improper face is last.
class Polytope {
public:
  static Polytope hull(std::vector<Point> points, Exec exec = Exec::parallel);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_); }
  bool is_point() const { return dim_ == 0; }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t i) const { return faces_.at(i); }
  std::size_t improper_face() const { return faces_.size() - 1; }

  std::optional<std::size_t> vertex_index(const Point& p) const;
  // Face index of the 0-face {vertex}.
  std::size_t vertex_face(std::size_t vertex) const { return vertex_faces_.at(vertex); }
  std::optional<std::size_t> find_face(const std::vector<int>& vertices) const;
  std::vector<std::size_t> faces_of_dim(int d) const;

  // Vertices on which <w, .> is maximal, and the face they span.
  std::vector<int> maximizers(const Exponent& w) const;
  std::size_t face_of_covector(const Exponent& w) const;

  // Sum of the active facet normals: strictly inside the normal cone of the
  // face. Zero for the improper face.
  Exponent interior_covector(std::size_t face) const;

  // Cover relations of the face lattice.
  const std::vector<std::size_t>& subfaces(std::size_t face) const { return down_.at(face); }
  const std::vector<std::size_t>& superfaces(std::size_t face) const { return up_.at(face); }
  bool face_contains(std::size_t big, std::size_t small) const;

  Point centroid(std::size_t face) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

private:
  std::size_t ambient_ = 0;
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::size_t> vertex_faces_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
};

Polytope convex_hull(std::vector<Point> points, Exec exec = Exec::parallel);
Polytope newton_polytope(const LaurentPolynomial& f);
Polytope minkowski_sum(std::span<const Polytope> summands, Exec exec = Exec::parallel);

// Total polytope of a Minkowski sum together with, for every face of the
// total, the face of each summand it decomposes into.
class MinkowskiSystem {
public:
  explicit MinkowskiSystem(std::vector<Polytope> summands, Exec exec = Exec::parallel);

  std::size_t size() const { return summands_.size(); }
  const Polytope& summand(std::size_t i) const { return summands_.at(i); }
  const std::vector<Polytope>& summands() const { return summands_; }
  const Polytope& total() const { return total_; }

  // Face index in each summand for face `face` of the total.
  const std::vector<std::size_t>& decomposition(std::size_t face) const {
    return decomposition_.at(face);
  }
  // Vertex index in each summand for vertex `vertex` of the total.
  std::vector<std::size_t> vertex_decomposition(std::size_t vertex) const;

private:
  std::vector<Polytope> summands_;
  Polytope total_;
  std::vector<std::vector<std::size_t>> decomposition_;
};

MinkowskiSystem minkowski_system(std::vector<Polytope> summands, Exec exec = Exec::parallel);

struct Developedness {
  bool developed = false;
  // Covector on which no summand face is a vertex, when one exists.
  std::optional<Exponent> witness;
  std::string reason;
};

Developedness check_developed(std::span<const Polytope> summands);
bool is_developed(std::span<const Polytope> summands);

// Requires a full-dimensional polytope.
Rational euclidean_volume(const Polytope& p);

// Normalized mixed volume (the Bernstein root count) by inclusion-exclusion.
Integer mixed_volume_ie(std::span<const Polytope> summands);

} // namespace vieta
