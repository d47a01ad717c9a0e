#include "symplan/bounds.hpp"
#include "symplan/quotient.hpp"
#include "symplan/worldgen.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace symplan;

namespace {

GroupPtr share(SymmetryGroup g) { return std::make_shared<const SymmetryGroup>(std::move(g)); }

bool same_world(const World& a, const World& b) {
  if (a.obstacles().size() != b.obstacles().size()) return false;
  for (std::size_t i = 0; i < a.obstacles().size(); ++i) {
    const auto va = a.obstacles()[i].vertices();
    const auto vb = b.obstacles()[i].vertices();
    if (va.size() != vb.size()) return false;
    for (std::size_t k = 0; k < va.size(); ++k)
      if (va[k] != vb[k]) return false;
  }
  return true;
}

std::vector<Eigen::Vector2d> random_points(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::vector<Eigen::Vector2d> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng));
  return pts;
}

// Circumcircle test by the classic in-circle determinant.
bool strictly_in_circumcircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                              const Eigen::Vector2d& p) {
  Eigen::Matrix3d m;
  const Eigen::Vector2d pa = a - p, pb = b - p, pc = c - p;
  m << pa.x(), pa.y(), pa.squaredNorm(), pb.x(), pb.y(), pb.squaredNorm(), pc.x(), pc.y(), pc.squaredNorm();
  const double orient = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
  return m.determinant() * (orient > 0 ? 1 : -1) > 1e-9;
}

std::size_t hull_size(const std::vector<Eigen::Vector2d>& pts) {
  std::vector<Eigen::Vector3d> p3;
  for (const auto& p : pts) p3.emplace_back(p.x(), p.y(), 0.0);
  return convex_hull_2d(p3).size();
}

}  // namespace

TEST(Delaunay, EmptyCircumcircles) {
  const auto pts = random_points(80, 1);
  const auto tris = delaunay_2d(pts);
  for (const auto& t : tris) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == t[0] || k == t[1] || k == t[2]) continue;
      ASSERT_FALSE(strictly_in_circumcircle(pts[t[0]], pts[t[1]], pts[t[2]], pts[k]));
    }
  }
}

TEST(Delaunay, TriangleCountFollowsEuler) {
  for (std::uint64_t seed : {2, 3, 4}) {
    const auto pts = random_points(60, seed);
    EXPECT_EQ(delaunay_2d(pts).size(), 2 * pts.size() - 2 - hull_size(pts));
  }
}

TEST(Delaunay, TrianglesAreCounterClockwise) {
  const auto pts = random_points(40, 5);
  for (const auto& t : delaunay_2d(pts)) {
    const Eigen::Vector2d u = pts[t[1]] - pts[t[0]], v = pts[t[2]] - pts[t[0]];
    EXPECT_GT(u.x() * v.y() - u.y() * v.x(), 0.0);
  }
}

TEST(AlphaShape, LargeAlphaRecoversDelaunay) {
  const auto pts = random_points(50, 6);
  EXPECT_EQ(alpha_shape_2d(pts, std::numeric_limits<double>::infinity()).size(), delaunay_2d(pts).size());
  EXPECT_EQ(alpha_shape_2d(pts, 1e6).size(), delaunay_2d(pts).size());
}

TEST(AlphaShape, UnitSquareSplitsIntoTwoTriangles) {
  // Circumradius of either half is sqrt(2)/2.
  const std::vector<Eigen::Vector2d> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto tris = alpha_shape_2d(sq, 0.8);
  ASSERT_EQ(tris.size(), 2u);
  double area = 0.0;
  for (const auto& t : tris) {
    const Eigen::Vector2d u = sq[t[1]] - sq[t[0]], v = sq[t[2]] - sq[t[0]];
    area += 0.5 * std::abs(u.x() * v.y() - u.y() * v.x());
  }
  EXPECT_NEAR(area, 1.0, 1e-12);
  EXPECT_TRUE(alpha_shape_2d(sq, 0.7).empty());
}

TEST(GenWorld, Deterministic) {
  for (int dim : {2, 3}) {
    WorldGenParams p = WorldGenParams::defaults(dim);
    p.seed = 42;
    EXPECT_TRUE(same_world(gen_world(p), gen_world(p)));
    WorldGenParams q = p;
    q.seed = 43;
    EXPECT_FALSE(same_world(gen_world(p), gen_world(q)));
  }
}

TEST(GenWorld, PlanarObstaclesAreTriangles) {
  WorldGenParams p = WorldGenParams::defaults(2);
  p.seed = 7;
  const World w = gen_world_2d(p);
  EXPECT_GT(w.obstacles().size(), 10u);
  for (const auto& o : w.obstacles()) {
    ASSERT_EQ(o.vertices().size(), 3u);
    EXPECT_GT(o.area(), 0.0);
  }
}

TEST(GenWorld, SpatialObstaclesAreConvexHullsInBounds) {
  WorldGenParams p = WorldGenParams::defaults(3);
  p.seed = 8;
  const World w = gen_world_3d(p);
  EXPECT_EQ(static_cast<int>(w.obstacles().size()), p.clusters);
  for (const auto& o : w.obstacles()) {
    const std::vector<Eigen::Vector3d> v(o.vertices().begin(), o.vertices().end());
    EXPECT_EQ(convex_hull_3d(v).size(), v.size());
    for (const auto& x : v) EXPECT_TRUE(w.bounds().contains(x, 3));
  }
}

TEST(GenWorld, RejectsBadParameters) {
  WorldGenParams p = WorldGenParams::defaults(2);
  p.alpha = 0.0;
  EXPECT_THROW(gen_world(p), std::invalid_argument);
  p = WorldGenParams::defaults(2);
  p.points = 0;
  EXPECT_THROW(gen_world(p), std::invalid_argument);
  p = WorldGenParams::defaults(3);
  p.clusters = 0;
  EXPECT_THROW(gen_world(p), std::invalid_argument);
}

TEST(GenWorld, DefaultsGiveModerateFreeSpace) {
  Rng rng(9);
  const std::vector<MovingObject> planar{MovingObject("oct", regular_polygon(8, 0.5), share(make_cyclic_2d(8)))};
  const std::vector<MovingObject> spatial{MovingObject("cube", cube(0.6), share(make_octahedral()))};
  for (int dim : {2, 3}) {
    double total = 0.0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      WorldGenParams p = WorldGenParams::defaults(dim);
      p.seed = s;
      const auto& objs = dim == 2 ? planar : spatial;
      total += estimate_free_volume(gen_world(p), objs, *objs[0].symmetry, weights_of(objs), 20000, rng).free_fraction;
    }
    EXPECT_GT(total / 5, 0.3) << dim;
    EXPECT_LT(total / 5, 0.55) << dim;
  }
}

TEST(GenProblem, ReturnsFreeDistinctClasses) {
  WorldGenParams p = WorldGenParams::defaults(2);
  p.seed = 10;
  const World world = gen_world(p);
  const auto g = share(make_cyclic_2d(8));
  const std::vector<MovingObject> objs{MovingObject("oct", regular_polygon(8, 0.5), g)};
  const MetricWeights w = weights_of(objs);
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Problem pr = gen_problem(world, objs, *g, w, rng);
    ASSERT_TRUE(is_free(world, objs, pr.start));
    ASSERT_TRUE(is_free(world, objs, pr.goal));
    ASSERT_GT(q_dist(*g, pr.start, pr.goal, w).length, 0.0);
  }
}

TEST(GenProblem, DeterministicPerSeed) {
  WorldGenParams p = WorldGenParams::defaults(2);
  p.seed = 12;
  const World world = gen_world(p);
  const auto g = share(make_cyclic_2d(3));
  const std::vector<MovingObject> objs{MovingObject("tri", regular_polygon(3, 0.5), g)};
  Rng a(5), b(5);
  const Problem x = gen_problem(world, objs, *g, weights_of(objs), a);
  const Problem y = gen_problem(world, objs, *g, weights_of(objs), b);
  EXPECT_EQ(dist_config(x.start, y.start, weights_of(objs)), 0.0);
  EXPECT_EQ(dist_config(x.goal, y.goal, weights_of(objs)), 0.0);
}

TEST(GenProblem, EmptyWorldSucceedsAndBlockedWorldThrows) {
  const auto g = share(make_cyclic_2d(4));
  const std::vector<MovingObject> objs{MovingObject("sq", regular_polygon(4, 0.5), g)};
  Rng rng(13);
  const World empty(2, Bounds::box2d(0, 0, 5, 5));
  EXPECT_NO_THROW(gen_problem(empty, objs, *g, weights_of(objs), rng, 10));
  const World full(2, Bounds::box2d(0, 0, 5, 5),
                   {ConvexShape(2, {{-1, -1, 0}, {6, -1, 0}, {6, 6, 0}, {-1, 6, 0}})});
  EXPECT_THROW(gen_problem(full, objs, *g, weights_of(objs), rng, 1000), std::runtime_error);
}
