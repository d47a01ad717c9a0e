#include "symplan/collision.hpp"
#include "symplan/worldgen.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace symplan;

namespace {

GroupPtr share(SymmetryGroup g) { return std::make_shared<const SymmetryGroup>(std::move(g)); }

ConvexShape box2(double x0, double y0, double x1, double y1) {
  return ConvexShape(2, {{x0, y0, 0}, {x1, y0, 0}, {x1, y1, 0}, {x0, y1, 0}});
}

ConvexShape box3(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi) {
  std::vector<Eigen::Vector3d> pts;
  for (int i = 0; i < 8; ++i) pts.emplace_back(i & 1 ? hi.x() : lo.x(), i & 2 ? hi.y() : lo.y(), i & 4 ? hi.z() : lo.z());
  return ConvexShape(3, pts);
}

// Segment crossing and point-in-polygon oracle for convex polygons.
double cross(const Eigen::Vector3d& o, const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

bool inside_convex(const std::vector<Eigen::Vector3d>& poly, const Eigen::Vector3d& p) {
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const double c = cross(poly[i], poly[(i + 1) % poly.size()], p);
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  return !(pos && neg);
}

bool segments_cross(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c, const Eigen::Vector3d& d) {
  const double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

bool oracle_polygons(const std::vector<Eigen::Vector3d>& p, const std::vector<Eigen::Vector3d>& q) {
  for (const auto& v : p)
    if (inside_convex(q, v)) return true;
  for (const auto& v : q)
    if (inside_convex(p, v)) return true;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (segments_cross(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()])) return true;
  return false;
}

// Oriented-box separating axis oracle: 15 candidate axes. Returns the largest
// separation gap found (positive means separated).
double obb_gap(const Eigen::Vector3d& ca, const Eigen::Matrix3d& ra, const Eigen::Vector3d& ha, const Eigen::Vector3d& cb,
               const Eigen::Matrix3d& rb, const Eigen::Vector3d& hb) {
  std::vector<Eigen::Vector3d> axes;
  for (int i = 0; i < 3; ++i) {
    axes.push_back(ra.col(i));
    axes.push_back(rb.col(i));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Eigen::Vector3d c = ra.col(i).cross(rb.col(j));
      if (c.norm() > 1e-9) axes.push_back(c.normalized());
    }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& n : axes) {
    double pa = 0, pb = 0;
    for (int i = 0; i < 3; ++i) {
      pa += ha[i] * std::abs(n.dot(ra.col(i)));
      pb += hb[i] * std::abs(n.dot(rb.col(i)));
    }
    best = std::max(best, std::abs(n.dot(cb - ca)) - pa - pb);
  }
  return best;
}

std::vector<Eigen::Vector3d> obb_vertices(const Eigen::Vector3d& c, const Eigen::Matrix3d& r, const Eigen::Vector3d& h) {
  std::vector<Eigen::Vector3d> out;
  for (int i = 0; i < 8; ++i) {
    const Eigen::Vector3d s(i & 1 ? 1 : -1, i & 2 ? 1 : -1, i & 4 ? 1 : -1);
    out.push_back(c + r * s.cwiseProduct(h));
  }
  return out;
}

}  // namespace

TEST(ConvexShape, DropsInteriorPoints) {
  const ConvexShape s(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0.5, 0.5, 0}});
  EXPECT_EQ(s.vertices().size(), 4u);
  EXPECT_NEAR(s.area(), 1.0, 1e-12);
  const ConvexShape c(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0.1, 0.1, 0.1}});
  EXPECT_EQ(c.vertices().size(), 4u);
}

TEST(ConvexShape, DegenerateInputThrows) {
  EXPECT_THROW(ConvexShape(2, {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}}), std::invalid_argument);
  EXPECT_THROW(ConvexShape(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), std::invalid_argument);
}

TEST(ConvexShape, PlanarVerticesAreCounterClockwise) {
  const ConvexShape s(2, {{1, 1, 0}, {0, 0, 0}, {0, 1, 0}, {1, 0, 0}});
  const auto v = s.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_GT(cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]), 0.0);
}

TEST(IsFree, EmptyWorldIsFreeInsideBounds) {
  Rng rng(1);
  const World world(2, Bounds::box2d(0, 0, 5, 5));
  const MovingObject obj("oct", regular_polygon(8, 0.5), share(make_cyclic_2d(8)));
  for (int i = 0; i < 1000; ++i) ASSERT_TRUE(is_free(world, obj, sample_uniform(Space{2, 1, world.bounds()}, rng)));
  EXPECT_FALSE(is_free(world, obj, Config::planar(-0.1, 2, 0)));
}

TEST(IsFree, InsideAnObstacleIsBlocked) {
  const World world(2, Bounds::box2d(0, 0, 5, 5), {box2(1, 1, 4, 4)});
  const MovingObject obj("tri", regular_polygon(3, 0.3), share(make_cyclic_2d(3)));
  EXPECT_FALSE(is_free(world, obj, Config::planar(2.5, 2.5, 0.3)));
  EXPECT_TRUE(is_free(world, obj, Config::planar(0.5, 0.5, 0.3)));
}

TEST(IsFree, TouchingSquaresCollide) {
  // Unit square centred at (c, 0.5) against the closed box [1,2]x[0,1]:
  // they meet iff c + 0.5 >= 1.
  const World world(2, Bounds::box2d(-5, -5, 5, 5), {box2(1, 0, 2, 1)});
  const MovingObject obj("square", rectangle(1.0, 1.0), share(make_cyclic_2d(4)));
  for (double c : {0.0, 0.4, 0.5 - 1e-6, 0.5, 0.5 + 1e-6, 1.0}) {
    EXPECT_EQ(is_free(world, obj, Config::planar(c, 0.5, 0)), !(c + 0.5 >= 1.0)) << c;
  }
}

TEST(IsFree, TouchingCubesCollide) {
  const World world(3, Bounds::box3d(Eigen::Vector3d::Constant(-5), Eigen::Vector3d::Constant(5)),
                    {box3({1, 0, 0}, {2, 1, 1})});
  const MovingObject obj("cube", cube(0.5), share(make_octahedral()));
  for (double c : {0.0, 0.4, 0.5 - 1e-6, 0.5, 0.5 + 1e-6, 1.0}) {
    EXPECT_EQ(is_free(world, obj, Config::spatial({c, 0.5, 0.5}, Rotation3())), !(c + 0.5 >= 1.0)) << c;
  }
}

TEST(Narrowphase, PolygonsMatchCrossingOracle) {
  Rng rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int hits = 0;
  for (int i = 0; i < 20000; ++i) {
    const ConvexShape a = regular_polygon(3 + i % 6, 0.5);
    const ConvexShape b = regular_polygon(3 + (i / 6) % 5, 0.4);
    const auto pa = place(a, ObjectPose{{u(rng), u(rng), 0}, Rotation2(u(rng) * kPi)});
    const auto pb = place(b, ObjectPose{{u(rng), u(rng), 0}, Rotation2(u(rng) * kPi)});
    const bool expected = oracle_polygons(pa, pb);
    hits += expected;
    ASSERT_EQ(polygons_intersect(pa, pb), expected) << i;
  }
  EXPECT_GT(hits, 1000);
  EXPECT_LT(hits, 19000);
}

TEST(Narrowphase, PolytopesMatchBoxSeparatingAxisOracle) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> size(0.1, 0.6);
  int hits = 0, compared = 0;
  for (int i = 0; i < 20000; ++i) {
    const Eigen::Vector3d ca(u(rng), u(rng), u(rng)), cb(u(rng), u(rng), u(rng));
    const Eigen::Matrix3d ra = sample_uniform_so3(rng).matrix(), rb = sample_uniform_so3(rng).matrix();
    const Eigen::Vector3d ha(size(rng), size(rng), size(rng)), hb(size(rng), size(rng), size(rng));
    const double gap = obb_gap(ca, ra, ha, cb, rb, hb);
    if (std::abs(gap) < 1e-6) continue;
    ++compared;
    const bool expected = gap < 0;
    hits += expected;
    ASSERT_EQ(polytopes_intersect(obb_vertices(ca, ra, ha), obb_vertices(cb, rb, hb)), expected) << i;
  }
  EXPECT_GT(compared, 19000);
  EXPECT_GT(hits, 1000);
}

TEST(IsFree, GridMatchesExhaustiveObstacleScan) {
  Rng rng(4);
  for (int dim : {2, 3}) {
    WorldGenParams p = WorldGenParams::defaults(dim);
    p.seed = 17;
    const World world = gen_world(p);
    const MovingObject obj = dim == 2 ? MovingObject("oct", regular_polygon(8, 0.5), share(make_cyclic_2d(8)))
                                      : MovingObject("cube", cube(0.6), share(make_octahedral()));
    const Space space{dim, 1, world.bounds()};
    int blocked = 0;
    for (int i = 0; i < 3000; ++i) {
      const Config q = sample_uniform(space, rng);
      const auto placed = place(obj.shape, q[0]);
      bool expected = world.bounds().contains(q[0].translation, dim);
      for (const auto& o : world.obstacles()) {
        if (!expected) break;
        const std::vector<Eigen::Vector3d> ov(o.vertices().begin(), o.vertices().end());
        if (dim == 2 ? polygons_intersect(placed, ov) : polytopes_intersect(placed, ov)) expected = false;
      }
      blocked += !expected;
      ASSERT_EQ(is_free(world, obj, q), expected);
    }
    EXPECT_GT(blocked, 300);
  }
}

TEST(IsFree, InvariantUnderTheObjectGroup) {
  Rng rng(5);
  for (int dim : {2, 3}) {
    WorldGenParams p = WorldGenParams::defaults(dim);
    p.seed = 23;
    const World world = gen_world(p);
    const MovingObject obj = dim == 2 ? MovingObject("oct", regular_polygon(8, 0.5), share(make_cyclic_2d(8)))
                                      : MovingObject("cube", cube(0.6), share(make_octahedral()));
    const Space space{dim, 1, world.bounds()};
    int violations = 0;
    for (int i = 0; i < 500; ++i) {
      const Config q = sample_uniform(space, rng);
      const bool f = is_free(world, obj, q);
      for (std::size_t g = 0; g < obj.symmetry->order(); ++g) violations += is_free(world, obj, act(*obj.symmetry, g, q)) != f;
    }
    EXPECT_EQ(violations, 0);
  }
}

TEST(IsFree, MonotoneUnderObstacleRemoval) {
  Rng rng(6);
  WorldGenParams p = WorldGenParams::defaults(2);
  p.seed = 5;
  const World world = gen_world(p);
  ASSERT_GT(world.obstacles().size(), 3u);
  const World fewer = world.without_obstacle(2);
  const MovingObject obj("tri", regular_polygon(3, 0.5), share(make_cyclic_2d(3)));
  for (int i = 0; i < 3000; ++i) {
    const Config q = sample_uniform(Space{2, 1, world.bounds()}, rng);
    if (is_free(world, obj, q)) ASSERT_TRUE(is_free(fewer, obj, q));
  }
}

TEST(IsFree, ObjectsCollideWithEachOther) {
  const World world(2, Bounds::box2d(0, 0, 5, 5));
  const std::vector<MovingObject> objs{MovingObject("a", rectangle(0.8, 0.3), share(make_cyclic_2d(2))),
                                       MovingObject("b", rectangle(0.8, 0.3), share(make_cyclic_2d(2)))};
  const Config apart(2, {ObjectPose{{1, 1, 0}, Rotation2(0)}, ObjectPose{{3, 3, 0}, Rotation2(0)}});
  const Config overlap(2, {ObjectPose{{1, 1, 0}, Rotation2(0)}, ObjectPose{{1.5, 1, 0}, Rotation2(0)}});
  EXPECT_TRUE(is_free(world, objs, apart));
  EXPECT_FALSE(is_free(world, objs, overlap));
}

TEST(EdgeFree, Basics) {
  const World empty(2, Bounds::box2d(0, 0, 5, 5));
  const World walled(2, Bounds::box2d(0, 0, 5, 5), {box2(2.45, 0, 2.5, 5)});
  const MovingObject obj("tri", regular_polygon(3, 0.3), share(make_cyclic_2d(3)));
  const Config a = Config::planar(1, 2, 0);
  const Config b = Config::planar(4, 2, 1.0);
  EXPECT_TRUE(edge_free(empty, obj, a, b, 0.01));
  // Endpoints are free and the 0.05-thick wall sits between them.
  ASSERT_TRUE(is_free(walled, obj, a));
  ASSERT_TRUE(is_free(walled, obj, b));
  EXPECT_FALSE(edge_free(walled, obj, a, b, 0.01));
  EXPECT_FALSE(edge_free(walled, obj, b, a, 0.01));
  const World blocked(2, Bounds::box2d(0, 0, 5, 5), {box2(0.5, 1.5, 1.5, 2.5), box2(3.5, 1.5, 4.5, 2.5)});
  EXPECT_FALSE(edge_free(blocked, obj, a, b, 0.01));
  EXPECT_THROW(edge_free(empty, obj, a, b, 0.0), std::invalid_argument);
}

TEST(EdgeFree, SymmetricInItsEndpoints) {
  Rng rng(7);
  WorldGenParams p = WorldGenParams::defaults(2);
  p.seed = 9;
  const World world = gen_world(p);
  const MovingObject obj("sq", regular_polygon(4, 0.5), share(make_cyclic_2d(4)));
  const Space space{2, 1, world.bounds()};
  int mixed = 0;
  for (int i = 0; i < 500; ++i) {
    const Config a = sample_uniform(space, rng);
    const Config b = sample_ball(a, 1.5, weights_of(std::span<const MovingObject>(&obj, 1)), rng);
    const bool ab = edge_free(world, obj, a, b, 0.02);
    ASSERT_EQ(ab, edge_free(world, obj, b, a, 0.02));
    mixed += ab;
  }
  EXPECT_GT(mixed, 0);
}

TEST(EdgeFree, CountsChecks) {
  const World empty(2, Bounds::box2d(0, 0, 5, 5));
  const MovingObject obj("tri", regular_polygon(3, 0.3), share(make_cyclic_2d(3)));
  std::size_t checks = 0;
  // Length 1 at resolution 0.1: ten steps, eleven configurations.
  ASSERT_TRUE(edge_free(empty, obj, Config::planar(1, 1, 0), Config::planar(2, 1, 0), 0.1, &checks));
  EXPECT_EQ(checks, 11u);
}

TEST(ObjectSymmetry, ShapesAndGroups) {
  EXPECT_TRUE(check_object_symmetry(MovingObject("sq", regular_polygon(4, 0.5), share(make_cyclic_2d(4)))).ok);
  EXPECT_FALSE(check_object_symmetry(MovingObject("sq", regular_polygon(4, 0.5), share(make_cyclic_2d(3)))).ok);
  const auto c = check_object_symmetry(MovingObject("cube", cube(0.6), share(make_octahedral())));
  EXPECT_TRUE(c.ok);
  EXPECT_LT(c.max_deviation, 1e-9);
  EXPECT_TRUE(check_object_symmetry(MovingObject("tet", regular_tetrahedron(1.0), share(make_tetrahedral()))).ok);
  EXPECT_TRUE(check_object_symmetry(
                  MovingObject("prism", regular_prism(6, 0.8, 1.0),
                               share(make_dihedral_3d(6, Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX()))))
                  .ok);
  EXPECT_TRUE(check_object_symmetry(
                  MovingObject("pyr", regular_pyramid(5, 0.8, 1.2), share(make_cyclic_3d(5, Eigen::Vector3d::UnitZ()))))
                  .ok);
}
