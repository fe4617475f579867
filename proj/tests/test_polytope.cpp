#include <gtest/gtest.h>

#include <numeric>

#include "helpers.hpp"
#include "vieta/errors.hpp"
#include "vieta/polytope.hpp"
#include "vieta/random.hpp"

using namespace vieta;
using vieta::test::face_with;
using vieta::test::hull_of;

namespace {

std::vector<std::size_t> f_vector(const Polytope& p) {
  std::vector<std::size_t> f(static_cast<std::size_t>(p.dim()), 0);
  for (std::size_t i = 0; i + 1 < p.faces().size(); ++i) ++f[static_cast<std::size_t>(p.face(i).dim)];
  return f;
}

} // namespace

TEST(Polytope, Triangle) {
  const Polytope p = hull_of({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(p.facets().size(), 3u);
  EXPECT_EQ(euclidean_volume(p), Rational(1, 2));
}

TEST(Polytope, SquareDropsInteriorAndEdgePoints) {
  const Polytope p = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_EQ(euclidean_volume(p), 1);
  const Polytope q = hull_of({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
  EXPECT_EQ(q.vertices().size(), 4u);
}

TEST(Polytope, Segment) {
  const Polytope p = hull_of({{3}, {-1}, {0}});
  ASSERT_EQ(p.vertices().size(), 2u);
  EXPECT_EQ(p.vertices()[0], to_point({-1}));
  EXPECT_EQ(p.vertices()[1], to_point({3}));
  EXPECT_EQ(euclidean_volume(p), 4);
}

TEST(Polytope, LowerDimensionalHullInThreeSpace) {
  const Polytope p = hull_of({{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {0, 0, 1}});
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(f_vector(p), (std::vector<std::size_t>{3, 3}));
}

TEST(Polytope, CubeFaceLattice) {
  const Polytope p = hull_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                              {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(f_vector(p), (std::vector<std::size_t>{8, 12, 6}));
  EXPECT_EQ(p.face(p.improper_face()).dim, 3);
}

TEST(Polytope, EulerRelationOnRandomPolytopes) {
  Random rng(21);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Polytope p = random_polytope(rng, n, 5 + rng.index(6), 4);
    const auto f = f_vector(p);
    long euler = 0;
    for (std::size_t d = 0; d < n; ++d) euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
    EXPECT_EQ(euler, 1 - (n % 2 == 0 ? 1 : -1)) << "n = " << n;
  }
}

TEST(Polytope, HullIsIdempotent) {
  Random rng(22);
  for (int k = 0; k < 30; ++k) {
    const Polytope p = random_polytope(rng, static_cast<std::size_t>(rng.uniform(2, 3)), 8, 4);
    const Polytope q = convex_hull(p.vertices());
    EXPECT_EQ(q.vertices(), p.vertices());
    EXPECT_EQ(q.faces().size(), p.faces().size());
  }
}

TEST(Polytope, SerialAndParallelHullsAgree) {
  Random rng(23);
  for (int k = 0; k < 20; ++k) {
    std::vector<Point> pts;
    for (int i = 0; i < 15; ++i) {
      Point x(3);
      for (auto& c : x) c = Rational(rng.uniform(-4, 4));
      pts.push_back(x);
    }
    const Polytope a = convex_hull(pts, Exec::serial);
    const Polytope b = convex_hull(pts, Exec::parallel);
    EXPECT_EQ(a.vertices(), b.vertices());
    ASSERT_EQ(a.facets().size(), b.facets().size());
    for (std::size_t i = 0; i < a.facets().size(); ++i) {
      EXPECT_EQ(a.facets()[i].normal, b.facets()[i].normal);
    }
  }
}

TEST(Minkowski, SquareFromTwoSegments) {
  const MinkowskiSystem ms({hull_of({{0, 0}, {1, 0}}), hull_of({{0, 0}, {0, 1}})});
  const Polytope& sq = ms.total();
  EXPECT_EQ(sq.vertices().size(), 4u);

  const std::size_t bottom = face_with(sq, {{0, 0}, {1, 0}});
  EXPECT_EQ(ms.decomposition(bottom)[0], ms.summand(0).improper_face());
  EXPECT_EQ(ms.decomposition(bottom)[1], ms.summand(1).vertex_face(0));

  const std::size_t right = face_with(sq, {{1, 0}, {1, 1}});
  EXPECT_EQ(ms.decomposition(right)[0], ms.summand(0).vertex_face(1));
  EXPECT_EQ(ms.decomposition(right)[1], ms.summand(1).improper_face());

  const std::size_t corner = *sq.vertex_index(to_point({1, 1}));
  EXPECT_EQ(ms.vertex_decomposition(corner), (std::vector<std::size_t>{1, 1}));
}

TEST(Minkowski, TranslationByAPoint) {
  const Polytope tri = hull_of({{0, 0}, {2, 0}, {0, 1}});
  const MinkowskiSystem ms({tri, hull_of({{5, -1}})});
  ASSERT_EQ(ms.total().faces().size(), tri.faces().size());
  for (std::size_t f = 0; f < ms.total().faces().size(); ++f) {
    EXPECT_EQ(ms.decomposition(f)[0], f);
    EXPECT_EQ(ms.decomposition(f)[1], 0u);
  }
}

TEST(Minkowski, VertexDecompositionsArePoints) {
  Random rng(24);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(random_polytope(rng, n, 4, 3));
    const MinkowskiSystem ms(ps);
    for (std::size_t f = 0; f < ms.total().faces().size(); ++f) {
      int sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += ms.summand(i).face(ms.decomposition(f)[i]).dim;
      EXPECT_GE(sum, ms.total().face(f).dim);
      if (ms.total().face(f).dim == 0) EXPECT_EQ(sum, 0);
    }
  }
}

TEST(Minkowski, TotalMatchesNewtonPolytopeOfProduct) {
  Random rng(25);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto sys = random_developed_system(rng, n, 5, 3, 9);
    std::vector<Polytope> ps;
    for (const auto& f : sys) ps.push_back(newton_polytope(f));
    EXPECT_EQ(MinkowskiSystem(ps).total().vertices(), newton_polytope(product(sys)).vertices());
  }
}

TEST(Developed, Examples) {
  const std::vector<Polytope> axes = {hull_of({{0, 0}, {1, 0}}), hull_of({{0, 0}, {0, 1}})};
  EXPECT_TRUE(is_developed(axes));

  const std::vector<Polytope> parallel = {hull_of({{0, 0}, {1, 0}}), hull_of({{0, 1}, {1, 1}})};
  const Developedness d = check_developed(parallel);
  EXPECT_FALSE(d.developed);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ((*d.witness)[0], 0);

  const Polytope tri = hull_of({{0, 0}, {1, 0}, {0, 1}});
  const std::vector<Polytope> twins = {tri, tri};
  const Developedness t = check_developed(twins);
  EXPECT_FALSE(t.developed);
  EXPECT_EQ(t.witness, (Exponent{1, 1}));

  const std::vector<Polytope> with_point = {tri, hull_of({{1, 1}})};
  EXPECT_FALSE(is_developed(with_point));
}

TEST(MixedVolume, Examples) {
  const Polytope e1 = hull_of({{0, 0}, {1, 0}});
  const Polytope e2 = hull_of({{0, 0}, {0, 1}});
  const Polytope tri = hull_of({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(mixed_volume_ie(std::vector{e1, e2}), 1);
  EXPECT_EQ(mixed_volume_ie(std::vector{tri, tri}), 1);
  EXPECT_EQ(mixed_volume_ie(std::vector{hull_of({{0, 0}, {2, 0}}), e2}), 2);
  // Three generic quadrics in three variables meet in 8 points.
  const Polytope q = hull_of({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  EXPECT_EQ(mixed_volume_ie(std::vector{q, q, q}), 8);
}

TEST(MixedVolume, SymmetricAndTranslationInvariant) {
  Random rng(26);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(random_polytope(rng, n, 4, 3));
    const Integer mv = mixed_volume_ie(ps);
    EXPECT_GE(mv, 0);
    std::vector<Polytope> rev(ps.rbegin(), ps.rend());
    EXPECT_EQ(mixed_volume_ie(rev), mv);
    std::vector<Point> moved;
    Point shift(n);
    for (auto& c : shift) c = rng.uniform(-3, 3);
    for (auto v : ps[0].vertices()) {
      for (std::size_t i = 0; i < n; ++i) v[i] += shift[i];
      moved.push_back(v);
    }
    ps[0] = convex_hull(moved);
    EXPECT_EQ(mixed_volume_ie(ps), mv);
  }
}
