#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "vieta/errors.hpp"
#include "vieta/flags.hpp"
#include "vieta/oracles.hpp"
#include "vieta/random.hpp"

using namespace vieta;
using vieta::test::face_with;
using vieta::test::facet_with_normal;
using vieta::test::hull_of;

namespace {

MinkowskiSystem square_ms() {
  return MinkowskiSystem({hull_of({{0, 0}, {1, 0}}), hull_of({{0, 0}, {0, 1}})});
}

std::size_t vertex_of(const Polytope& p, const Exponent& e) { return *p.vertex_index(to_point(e)); }

Flag corner_flag(const Polytope& sq, const Exponent& v, const Exponent& other_end) {
  return Flag{{sq.vertex_face(vertex_of(sq, v)), face_with(sq, {v, other_end}), sq.improper_face()}};
}

MinkowskiSystem segment_triangle_ms() {
  return MinkowskiSystem({hull_of({{0, 0}, {1, 0}}), hull_of({{0, 0}, {2, 1}, {1, 2}})});
}

} // namespace

TEST(FlagSign, Segment) {
  const Polytope seg = hull_of({{0}, {4}});
  EXPECT_EQ(flag_sign(seg, Flag{{seg.vertex_face(0), seg.improper_face()}}), 1);
  EXPECT_EQ(flag_sign(seg, Flag{{seg.vertex_face(1), seg.improper_face()}}), -1);
}

TEST(FlagSign, Square) {
  const Polytope sq = square_ms().total();
  EXPECT_EQ(flag_sign(sq, corner_flag(sq, {1, 1}, {0, 1})), 1);  // top edge
  EXPECT_EQ(flag_sign(sq, corner_flag(sq, {1, 0}, {0, 0})), -1); // bottom edge
  EXPECT_EQ(flag_sign(sq, corner_flag(sq, {1, 1}, {1, 0})), -1); // right edge
}

TEST(FlagSign, RejectsIncompleteFlags) {
  const Polytope sq = square_ms().total();
  EXPECT_THROW(flag_sign(sq, Flag{{sq.vertex_face(0), sq.improper_face()}}), PreconditionError);
}

TEST(FlagSign, EachEdgeFlipsTheSign) {
  // Two flags sharing all members but one have opposite signs.
  Random rng(31);
  for (int k = 0; k < 10; ++k) {
    const Polytope p = random_polytope(rng, 3, 7, 3);
    for (const Flag& f : complete_flags(p)) {
      Flag g = f;
      const std::size_t v = f.faces[0];
      for (std::size_t other : p.subfaces(f.faces[1])) {
        if (other != v) g.faces[0] = other;
      }
      EXPECT_EQ(flag_sign(p, f), -flag_sign(p, g));
    }
  }
}

TEST(Covering, SquareCorners) {
  const MinkowskiSystem ms = square_ms();
  const Polytope& sq = ms.total();
  const VertexCovering top_right = vertex_covering(ms, vertex_of(sq, {1, 1}));
  EXPECT_EQ(top_right.pieces[0], (std::vector<std::size_t>{facet_with_normal(sq, {1, 0})}));
  EXPECT_EQ(top_right.pieces[1], (std::vector<std::size_t>{facet_with_normal(sq, {0, 1})}));
  const VertexCovering origin = vertex_covering(ms, vertex_of(sq, {0, 0}));
  EXPECT_EQ(origin.pieces[0], (std::vector<std::size_t>{facet_with_normal(sq, {-1, 0})}));
  EXPECT_EQ(origin.pieces[1], (std::vector<std::size_t>{facet_with_normal(sq, {0, -1})}));
}

TEST(Covering, EmptyPieceGivesZero) {
  const MinkowskiSystem ms = segment_triangle_ms();
  const std::size_t v = vertex_of(ms.total(), {3, 1});
  const VertexCovering cov = vertex_covering(ms, v);
  EXPECT_EQ(cov.pieces[0].size(), 2u);
  EXPECT_TRUE(cov.pieces[1].empty());
  EXPECT_EQ(combinatorial_coefficient(ms, v), 0);
}

TEST(Signature, SquareCorner) {
  const MinkowskiSystem ms = square_ms();
  const Polytope& sq = ms.total();
  const std::size_t v = vertex_of(sq, {1, 1});
  EXPECT_EQ(signature(ms, v, sq.vertex_face(v)), (std::vector<int>{0, 1}));
  EXPECT_EQ(signature(ms, v, face_with(sq, {{0, 1}, {1, 1}})), (std::vector<int>{1}));
  EXPECT_EQ(signature(ms, v, face_with(sq, {{1, 0}, {1, 1}})), (std::vector<int>{0}));
}

TEST(CombinatorialCoefficient, Square) {
  const MinkowskiSystem ms = square_ms();
  const Polytope& sq = ms.total();
  EXPECT_EQ(combinatorial_coefficient(ms, vertex_of(sq, {1, 1})), 1);
  EXPECT_EQ(combinatorial_coefficient(ms, vertex_of(sq, {0, 0})), 1);
  EXPECT_EQ(combinatorial_coefficient(ms, vertex_of(sq, {1, 0})), -1);
  EXPECT_EQ(combinatorial_coefficient(ms, vertex_of(sq, {0, 1})), -1);
}

TEST(CombinatorialCoefficient, OneVariable) {
  const MinkowskiSystem ms({hull_of({{0}, {3}})});
  EXPECT_EQ(combinatorial_coefficient(ms, 0), 1);
  EXPECT_EQ(combinatorial_coefficient(ms, 1), -1);
}

TEST(CombinatorialCoefficient, RequiresDevelopedSystem) {
  const Polytope tri = hull_of({{0, 0}, {1, 0}, {0, 1}});
  const MinkowskiSystem ms({tri, tri});
  EXPECT_THROW(combinatorial_coefficient(ms, 0), PreconditionError);
}

TEST(CombinatorialCoefficient, TranspositionNegates) {
  Random rng(32);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto sys = random_developed_system(rng, n, 5, 3, 9);
    std::vector<Polytope> ps;
    for (const auto& f : sys) ps.push_back(newton_polytope(f));
    const MinkowskiSystem ms(ps);
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    std::swap(perm[i], perm[j]);
    for (std::size_t v = 0; v < ms.total().vertices().size(); ++v) {
      const VertexCovering cov = vertex_covering(ms, v);
      EXPECT_EQ(combinatorial_coefficient(ms.total(), cov.permuted(perm)),
                -combinatorial_coefficient(ms.total(), cov));
    }
  }
}

TEST(CombinatorialCoefficient, SimpleVerticesHaveUnitCoefficient) {
  Random rng(33);
  int seen = 0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto sys = random_developed_system(rng, n, 5, 3, 9);
    std::vector<Polytope> ps;
    for (const auto& f : sys) ps.push_back(newton_polytope(f));
    const MinkowskiSystem ms(ps);
    for (std::size_t v = 0; v < ms.total().vertices().size(); ++v) {
      const VertexCovering cov = vertex_covering(ms, v);
      if (cov.labels.size() != n) continue;
      std::set<std::size_t> distinct;
      bool single = true;
      for (const auto& piece : cov.pieces) {
        single = single && piece.size() == 1;
        if (!piece.empty()) distinct.insert(piece[0]);
      }
      if (!single || distinct.size() != n) continue;
      ++seen;
      EXPECT_EQ(std::abs(combinatorial_coefficient(ms, v)), 1);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Degree, IdentityCollapseAntipodal) {
  const PolyhedralComplex sq(square_ms().total());
  for (const Flag& ref : sq.flags()) {
    EXPECT_EQ(degree_by_flags(identity_map(sq), ref), 1);
    EXPECT_EQ(degree_by_flags(collapse_map(sq, sq.polytope().vertex_face(0)), ref), 0);
    EXPECT_EQ(degree_by_flags(antipodal_map(sq), ref), 1);
  }
  const PolyhedralComplex cube(hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                        {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(degree_by_flags(antipodal_map(cube), cube.flags().front()), -1);
}

TEST(Degree, IndependentOfReferenceFlagAndMatchesHomology) {
  Random rng(34);
  for (int k = 0; k < 12; ++k) {
    const PolyhedralComplex x(random_polytope(rng, k % 2 == 0 ? 3 : 2, 6, 3));
    const std::size_t cell = rng.index(x.cell_count());
    for (const FaceMap& psi : {identity_map(x), collapse_map(x, cell)}) {
      const long h = degree_by_homology(psi);
      for (const Flag& ref : psi.target.flags()) {
        EXPECT_EQ(degree_by_flags(psi, ref, Exec::serial), h);
        EXPECT_EQ(degree_by_flags(psi, ref, Exec::parallel), h);
      }
    }
  }
}

TEST(Degree, PyramidMapOfSquareCorner) {
  const MinkowskiSystem ms = square_ms();
  const FaceMap psi = pyramid_covering_map(ms, vertex_of(ms.total(), {1, 1}));
  validate_face_map(psi);
  EXPECT_EQ(degree_by_flags(psi, simplex_reference_flag(psi.target)), 1);
  EXPECT_EQ(degree_by_homology(psi), 1);
}

TEST(Degree, PyramidMapsMatchCoefficients) {
  Random rng(35);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto sys = random_developed_system(rng, n, 5, 3, 9);
    std::vector<Polytope> ps;
    for (const auto& f : sys) ps.push_back(newton_polytope(f));
    const MinkowskiSystem ms(ps);
    for (std::size_t v = 0; v < ms.total().vertices().size(); ++v) {
      const FaceMap psi = pyramid_covering_map(ms, v);
      const long c = combinatorial_coefficient(ms, v);
      EXPECT_EQ(degree_by_homology(psi), c);
      for (const Flag& ref : psi.target.flags()) EXPECT_EQ(degree_by_flags(psi, ref), c);
    }
  }
}

TEST(Degree, SimplexReferenceFlagIsPositive) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const PolyhedralComplex s = simplex_boundary(n);
    EXPECT_EQ(s.flag_sign(simplex_reference_flag(s)), 1);
  }
}

TEST(FaceMap, ValidationRejectsNonMonotoneMaps) {
  const PolyhedralComplex sq(square_ms().total());
  FaceMap psi = identity_map(sq);
  // Send an edge to a vertex it does not contain; its endpoints stay put.
  const std::size_t edge = sq.polytope().faces_of_dim(1).front();
  for (std::size_t v : sq.polytope().faces_of_dim(0)) {
    if (!sq.polytope().face_contains(edge, v)) {
      psi.image[edge] = v;
      break;
    }
  }
  EXPECT_THROW(validate_face_map(psi), PreconditionError);
}
