#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "vieta/kernels.hpp"
#include "vieta/polytope.hpp"

namespace vieta {

// Chain of face indices X_0 ⊂ X_1 ⊂ ... with dim X_i = i.
struct Flag {
  std::vector<std::size_t> faces;

  std::size_t vertex_face() const { return faces.front(); }
  friend bool operator==(const Flag&, const Flag&) = default;
};

// True when `flag` is a maximal chain of p ending at the improper face.
bool is_complete_flag(const Polytope& p, const Flag& flag);

// All complete flags of a full-dimensional polytope, in lexicographic order of
// face indices.
std::vector<Flag> complete_flags(const Polytope& p);

// Orientation of the frame e_i = centroid(X_i) - X_0 against the standard
// orientation of R^n. The flag must be complete and p full-dimensional.
int flag_sign(const Polytope& p, const Flag& flag);

// The boundary of a full-dimensional polytope P in R^(n+1), viewed as an
// n-dimensional polyhedral complex. Cells are the proper faces of P and keep
// the face indices of P. A complex flag runs through cells of dimension 0..n;
// its sign is that of the same flag extended by P.
class PolyhedralComplex {
public:
  explicit PolyhedralComplex(Polytope boundary_of);

  const Polytope& polytope() const { return polytope_; }
  int dim() const { return polytope_.dim() - 1; }
  std::size_t cell_count() const { return polytope_.faces().size() - 1; }
  const Face& cell(std::size_t i) const;

  bool is_flag(const Flag& flag) const;
  std::vector<Flag> flags() const;
  int flag_sign(const Flag& flag) const;

private:
  Polytope polytope_;
};

// Order-preserving assignment of cells: image[c] is the target cell of source
// cell c.
struct FaceMap {
  PolyhedralComplex source;
  PolyhedralComplex target;
  std::vector<std::size_t> image;
};

// Throws PreconditionError unless psi maps cells to cells and preserves
// inclusion.
void validate_face_map(const FaceMap& psi);

FaceMap identity_map(const PolyhedralComplex& x);
// Cells inside `cell` stay put; everything else goes to `cell`.
FaceMap collapse_map(const PolyhedralComplex& x, std::size_t cell);
// x -> -x about the centroid; requires a centrally symmetric polytope.
FaceMap antipodal_map(const PolyhedralComplex& x);

// sgn(ref) times the signed count of source flags mapped cell by cell onto
// ref.
long degree_by_flags(const FaceMap& psi, const Flag& ref, Exec exec = Exec::parallel);

// Covering of the facets of the total polytope through a vertex A by the
// pieces D_0, ..., D_{n-1} (0-based summand indices): a facet F belongs to D_i
// when the i-th summand face of F is a vertex.
struct VertexCovering {
  std::size_t vertex = 0;
  std::size_t n = 0;
  std::map<std::size_t, std::vector<int>> labels; // facet index -> summand indices
  std::vector<std::vector<std::size_t>> pieces;   // D_i as facet indices

  // Relabel pieces: piece i becomes piece perm[i].
  VertexCovering permuted(const std::vector<int>& perm) const;
};

VertexCovering vertex_covering(const MinkowskiSystem& ms, std::size_t vertex);

// Summand indices i such that some facet through `face` lies in D_i. The face
// must contain the covering's vertex.
std::vector<int> signature(const Polytope& total, const VertexCovering& cov, std::size_t face);
std::vector<int> signature(const MinkowskiSystem& ms, std::size_t vertex, std::size_t face);

// Signed count of flags A = G_0 ⊂ ... ⊂ G_{n-1} ⊂ Δ with signature(G_i)
// exactly {i, ..., n-1}. Zero when some piece is empty.
long combinatorial_coefficient(const Polytope& total, const VertexCovering& cov);
long combinatorial_coefficient(const MinkowskiSystem& ms, std::size_t vertex);

// Boundary of the standard simplex conv(0, e_1, ..., e_n).
PolyhedralComplex simplex_boundary(std::size_t n);

// The flag v_0 ⊂ [v_0, v_1] ⊂ ... ⊂ [v_0, ..., v_{n-1}] of simplex_boundary(n),
// which has sign +1.
Flag simplex_reference_flag(const PolyhedralComplex& simplex);

// Cone of the total polytope at A truncated to a pyramid, mapped onto the
// boundary of the standard simplex: a pyramid cell G goes to the simplex face
// spanned by v_j for j outside its signature, where the base carries label 0
// and piece D_i carries label i + 1. Its degree is the combinatorial
// coefficient.
FaceMap pyramid_covering_map(const Polytope& total, const VertexCovering& cov);
FaceMap pyramid_covering_map(const MinkowskiSystem& ms, std::size_t vertex);

} // namespace vieta
