#include "symplan/quotient.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace symplan;

namespace {

constexpr double kDeg = kPi / 180.0;

GroupPtr share(SymmetryGroup g) { return std::make_shared<const SymmetryGroup>(std::move(g)); }

// Orbit enumeration oracle, written against dist_config and act only.
double brute_q_dist(const SymmetryGroup& g, const Config& a, const Config& b, const MetricWeights& w) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < g.order(); ++e) best = std::min(best, dist_config(a, act(g, e, b), w));
  return best;
}

Space planar(std::size_t objects = 1) { return Space{2, objects, Bounds::box2d(0, 0, 4, 4)}; }
Space spatial() { return Space{3, 1, Bounds::box3d(Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(4))}; }

struct Case {
  GroupPtr group;
  Space space;
};

std::vector<Case> cases() {
  std::vector<std::pair<SymmetryGroup, std::size_t>> two{{make_cyclic_2d(2), 0}, {make_cyclic_2d(2), 1}};
  return {
      {share(make_cyclic_2d(3)), planar()},
      {share(make_cyclic_2d(8)), planar()},
      {share(make_cyclic_2d(4)), planar()},
      {share(make_octahedral()), spatial()},
      {share(make_icosahedral()), spatial()},
      {share(product(two)), planar(2)},
  };
}

ConvexShape box(double x0, double y0, double x1, double y1) {
  return ConvexShape(2, {{x0, y0, 0}, {x1, y0, 0}, {x1, y1, 0}, {x0, y1, 0}});
}

}  // namespace

TEST(QDist, TrivialGroupEqualsBaseDistance) {
  Rng rng(1);
  const auto g = make_trivial(2);
  const MetricWeights w = MetricWeights::uniform(1, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const Config a = sample_uniform(planar(), rng);
    const Config b = sample_uniform(planar(), rng);
    const QDist d = q_dist(g, a, b, w);
    ASSERT_EQ(d.length, dist_config(a, b, w));
    ASSERT_EQ(d.element, 0u);
  }
}

TEST(QDist, CyclicFourEightyFiveDegrees) {
  const auto g = make_cyclic_2d(4);
  const QDist d = q_dist(g, Config::planar(0, 0, 0), Config::planar(0, 0, 85 * kDeg), MetricWeights::uniform(1));
  EXPECT_NEAR(d.length, 5 * kDeg, 1e-12);
  // 85° + the element must land on 355°.
  const Config end = act(g, d.element, Config::planar(0, 0, 85 * kDeg));
  EXPECT_NEAR(std::get<Rotation2>(end[0].rotation).angle(), 355 * kDeg, 1e-12);
}

TEST(QDist, CyclicThreeHundredDegrees) {
  const auto g = make_cyclic_2d(3);
  const QDist d = q_dist(g, Config::planar(0, 0, 0), Config::planar(0, 0, 100 * kDeg), MetricWeights::uniform(1));
  EXPECT_NEAR(d.length, 20 * kDeg, 1e-12);
}

TEST(QDist, MatchesOrbitEnumeration) {
  Rng rng(2);
  for (const auto& c : cases()) {
    const MetricWeights w = MetricWeights::uniform(c.space.objects, 0.8);
    for (int i = 0; i < 2000; ++i) {
      const Config a = sample_uniform(c.space, rng);
      const Config b = sample_uniform(c.space, rng);
      const QDist d = q_dist(*c.group, a, b, w);
      ASSERT_NEAR(d.length, brute_q_dist(*c.group, a, b, w), 1e-12);
      ASSERT_NEAR(dist_config(a, act(*c.group, d.element, b), w), d.length, 1e-12);
    }
  }
}

TEST(QDist, TiesBreakToLowestIndex) {
  // 45° is equidistant from 0° and 90° under C4: elements 0 and 3 tie.
  const auto g = make_cyclic_2d(4);
  const QDist d = q_dist(g, Config::planar(0, 0, 0), Config::planar(0, 0, 45 * kDeg), MetricWeights::uniform(1));
  EXPECT_NEAR(d.length, 45 * kDeg, 1e-12);
  EXPECT_EQ(d.element, 0u);
}

TEST(QDist, MetricOnClasses) {
  Rng rng(3);
  for (const auto& c : cases()) {
    const MetricWeights w = MetricWeights::uniform(c.space.objects);
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const Config a = sample_uniform(c.space, rng);
      const Config b = sample_uniform(c.space, rng);
      const Config x = sample_uniform(c.space, rng);
      const double ab = q_dist(*c.group, a, b, w).length;
      ASSERT_NEAR(ab, q_dist(*c.group, b, a, w).length, 1e-9);
      ASSERT_LE(ab, dist_config(a, b, w) + 1e-15);
      worst = std::max(worst, ab - q_dist(*c.group, a, x, w).length - q_dist(*c.group, x, b, w).length);
    }
    EXPECT_LE(worst, 1e-9);
  }
}

TEST(QDist, ZeroExactlyOnTheSameOrbit) {
  Rng rng(4);
  for (const auto& c : cases()) {
    const MetricWeights w = MetricWeights::uniform(c.space.objects);
    const Config a = sample_uniform(c.space, rng);
    for (std::size_t e = 0; e < c.group->order(); ++e) ASSERT_LT(q_dist(*c.group, a, act(*c.group, e, a), w).length, 1e-9);
    const Config b = sample_uniform(c.space, rng);
    EXPECT_GT(q_dist(*c.group, a, b, w).length, 1e-6);
  }
}

TEST(QDist, InvariantUnderRepresentativeChange) {
  Rng rng(5);
  for (const auto& c : cases()) {
    const MetricWeights w = MetricWeights::uniform(c.space.objects);
    for (int i = 0; i < 50; ++i) {
      const Config a = sample_uniform(c.space, rng);
      const Config b = sample_uniform(c.space, rng);
      const double ref = q_dist(*c.group, a, b, w).length;
      std::uniform_int_distribution<std::size_t> pick(0, c.group->order() - 1);
      const std::size_t g = pick(rng);
      const std::size_t h = pick(rng);
      ASSERT_NEAR(q_dist(*c.group, act(*c.group, g, a), act(*c.group, h, b), w).length, ref, 1e-9);
    }
  }
}

TEST(ClassPoint, EqualityFollowsOrbits) {
  Rng rng(6);
  const auto g = share(make_cyclic_2d(4));
  const Config q = sample_uniform(planar(), rng);
  const ClassPoint p = project(q, g);
  for (std::size_t e = 0; e < g->order(); ++e) EXPECT_TRUE(p.same_class(project(act(*g, e, q), g)));
  EXPECT_FALSE(p.same_class(project(Config::planar(q[0].translation.x(), q[0].translation.y(),
                                                   std::get<Rotation2>(q[0].rotation).angle() + 0.3),
                                    g)));
  EXPECT_TRUE(project(p.representative(), g).same_class(p));
}

TEST(ClassPoint, GroupMismatchThrows) {
  const ClassPoint a = project(Config::planar(0, 0, 0), share(make_cyclic_2d(4)));
  const ClassPoint b = project(Config::planar(0, 0, 0), share(make_cyclic_2d(3)));
  EXPECT_THROW(q_dist(a, b, MetricWeights::uniform(1)), std::invalid_argument);
}

TEST(Sampling, GlobalSamplesFillOrbitSectorsEvenly) {
  Rng rng(7);
  const auto g = share(make_cyclic_2d(4));
  std::array<double, 4> counts{};
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const double a = std::get<Rotation2>(sample_global_q(planar(), g, rng).representative()[0].rotation).angle();
    counts[std::min(3, static_cast<int>(a / (kPi / 2)))] += 1;
  }
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - n / 4.0) * (c - n / 4.0) / (n / 4.0);
  EXPECT_LT(chi2, 16.27);  // 3 degrees of freedom, 0.999 quantile
}

TEST(Sampling, TrivialGroupReducesToUniform) {
  Rng a(8), b(8);
  const auto g = share(make_trivial(2));
  for (int i = 0; i < 100; ++i) {
    const Config x = sample_global_q(planar(), g, a).representative();
    const Config y = sample_uniform(planar(), b);
    ASSERT_EQ(dist_config(x, y, MetricWeights::uniform(1)), 0.0);
  }
}

TEST(Sampling, LocalSamplesStayInTheQuotientBall) {
  Rng rng(9);
  for (const auto& c : cases()) {
    const MetricWeights w = MetricWeights::uniform(c.space.objects);
    const ClassPoint center = sample_global_q(c.space, c.group, rng);
    for (double r : {1e-9, 0.1, 1.0}) {
      for (int i = 0; i < 2000; ++i) {
        const ClassPoint s = sample_local_q(center, r, w, rng);
        ASSERT_LE(q_dist(center, s, w).length, r + 1e-12);
      }
    }
  }
}

TEST(LocalPlan, EmptyWorldAlwaysSucceedsWithQuotientLength) {
  Rng rng(10);
  const auto g = share(make_cyclic_2d(4));
  const World world(2, Bounds::box2d(0, 0, 4, 4));
  const std::vector<MovingObject> objects{MovingObject("square", regular_polygon(4, 0.5), g)};
  const MetricWeights w = weights_of(objects);
  for (int i = 0; i < 200; ++i) {
    const ClassPoint a = sample_global_q(planar(), g, rng);
    const ClassPoint b = sample_global_q(planar(), g, rng);
    const auto e = local_plan(a, b, world, objects, 0.05);
    ASSERT_TRUE(e.has_value());
    ASSERT_NEAR(e->length, q_dist(a, b, w).length, 1e-12);
    ASSERT_TRUE(project(e->endpoint, g).same_class(b));
  }
}

TEST(LocalPlan, WallBlocksEveryRepresentative) {
  const auto g = share(make_cyclic_2d(4));
  const World world(2, Bounds::box2d(0, 0, 4, 4), {box(1.9, 0, 2.1, 4)});
  const std::vector<MovingObject> objects{MovingObject("square", regular_polygon(4, 0.5), g)};
  const ClassPoint a = project(Config::planar(1, 2, 0), g);
  const ClassPoint b = project(Config::planar(3, 2, 0.4), g);
  EXPECT_FALSE(local_plan(a, b, world, objects, 0.01).has_value());
}

TEST(LocalPlan, RotatedRepresentativeEscapesASlot) {
  // A square of circumradius 0.5 (corners on the axes at 0°, flat at 45°) in
  // a horizontal slot of half-height 0.3736. Turning 45° to 133° sweeps past
  // 90° and hits the walls; the aware planner turns -2° instead.
  const double half = 0.3736;
  const World world(2, Bounds::box2d(0, 0, 4, 4), {box(0, 0, 4, 2 - half), box(0, 2 + half, 4, 4)});
  const auto aware = share(make_cyclic_2d(4));
  const auto unaware = share(make_trivial(2));
  const ConvexShape square = regular_polygon(4, 0.5);
  const std::vector<MovingObject> ao{MovingObject("square", square, aware)};
  const std::vector<MovingObject> uo{MovingObject("square", square, unaware)};
  const Config start = Config::planar(1.5, 2, 45 * kDeg);
  const Config goal = Config::planar(2.5, 2, 133 * kDeg);
  ASSERT_TRUE(is_free(world, ao, start));
  ASSERT_TRUE(is_free(world, ao, goal));

  const auto e = local_plan(project(start, aware), project(goal, aware), world, ao, 0.01);
  ASSERT_TRUE(e.has_value());
  EXPECT_NEAR(std::get<Rotation2>(e->endpoint[0].rotation).angle(), 43 * kDeg, 1e-12);
  EXPECT_TRUE(edge_free(world, ao, start, e->endpoint, 1e-3));

  EXPECT_FALSE(local_plan(project(start, unaware), project(goal, unaware), world, uo, 0.01).has_value());
  EXPECT_FALSE(edge_free(world, uo, start, goal, 1e-3));
}

TEST(Roadmap, EdgePairEndPoints) {
  const auto g = share(make_cyclic_2d(4));
  Roadmap rm(g);
  const Config a = Config::planar(0, 0, 0);
  const Config b = Config::planar(1, 0, 85 * kDeg);
  const std::size_t va = rm.add_vertex(a);
  const std::size_t vb = rm.add_vertex(b);
  const MetricWeights w = MetricWeights::uniform(1);
  const QDist d = q_dist(*g, a, b, w);
  rm.add_edge_pair(va, vb, EdgeEnd{act(*g, d.element, b), d.length, d.element});
  ASSERT_EQ(rm.edge_count(), 2u);
  const auto* fwd = rm.find_edge(va, vb);
  const auto* back = rm.find_edge(vb, va);
  ASSERT_NE(fwd, nullptr);
  ASSERT_NE(back, nullptr);
  EXPECT_NEAR(dist_config(rm.vertex(vb).q, back->endpoint, w), d.length, 1e-12);
  EXPECT_NEAR(back->length, d.length, 1e-12);
  EXPECT_LT(dist_config(act(*g, back->element, a), back->endpoint, w), 1e-12);
  // The two directions reach different members of their target classes.
  EXPECT_GT(dist_config(back->endpoint, a, w), 1e-6);
}

TEST(Roadmap, RollbackRestoresCounts) {
  const auto g = share(make_cyclic_2d(2));
  Roadmap rm(g);
  rm.add_vertex(Config::planar(0, 0, 0));
  rm.add_vertex(Config::planar(1, 0, 0));
  rm.add_edge_pair(0, 1, EdgeEnd{Config::planar(1, 0, 0), 1.0, 0});
  const auto cp = rm.checkpoint();
  const std::size_t v = rm.add_vertex(Config::planar(2, 0, 0));
  rm.add_edge_pair(1, v, EdgeEnd{Config::planar(2, 0, 0), 1.0, 0});
  rm.rollback(cp);
  EXPECT_EQ(rm.vertex_count(), 2u);
  EXPECT_EQ(rm.edge_count(), 2u);
  EXPECT_EQ(rm.out_edges(1).size(), 1u);
}

TEST(LiftPath, SingleEdge) {
  const auto g = share(make_cyclic_2d(4));
  Roadmap rm(g);
  const Config a = Config::planar(0, 0, 0);
  const Config b = Config::planar(1, 0, 85 * kDeg);
  rm.add_vertex(a);
  rm.add_vertex(b);
  const MetricWeights w = MetricWeights::uniform(1);
  const QDist d = q_dist(*g, a, b, w);
  const Config end = act(*g, d.element, b);
  rm.add_edge_pair(0, 1, EdgeEnd{end, d.length, d.element});
  const std::vector<std::size_t> path{0, 1};
  const auto lifted = lift_path(rm, path, w);
  ASSERT_EQ(lifted.waypoints.size(), 2u);
  EXPECT_EQ(dist_config(lifted.waypoints[0], a, w), 0.0);
  EXPECT_LT(dist_config(lifted.waypoints[1], end, w), 1e-12);
  EXPECT_NEAR(lifted.total_length, d.length, 1e-12);
}

TEST(LiftPath, SecondWaypointCarriesTheFirstOffset) {
  const auto g = share(make_cyclic_2d(4));
  const MetricWeights w = MetricWeights::uniform(1);
  Roadmap rm(g);
  const Config a = Config::planar(0, 0, 0);
  const Config b = Config::planar(1, 0, 85 * kDeg);   // reached as 355°
  const Config c = Config::planar(2, 0, 350 * kDeg);  // nearest to b's 85° is 80°
  rm.add_vertex(a);
  rm.add_vertex(b);
  rm.add_vertex(c);
  const QDist ab = q_dist(*g, a, b, w);
  const QDist bc = q_dist(*g, b, c, w);
  ASSERT_NE(ab.element, 0u);
  rm.add_edge_pair(0, 1, EdgeEnd{act(*g, ab.element, b), ab.length, ab.element});
  rm.add_edge_pair(1, 2, EdgeEnd{act(*g, bc.element, c), bc.length, bc.element});
  const std::vector<std::size_t> path{0, 1, 2};
  const auto lifted = lift_path(rm, path, w);
  ASSERT_EQ(lifted.waypoints.size(), 3u);
  // The third waypoint is the second edge's end point moved by the first edge's element.
  const Config expected = act(*g, ab.element, act(*g, bc.element, c));
  EXPECT_LT(dist_config(lifted.waypoints[2], expected, w), 1e-12);
  EXPECT_NEAR(dist_config(lifted.waypoints[0], lifted.waypoints[1], w), ab.length, 1e-12);
  EXPECT_NEAR(dist_config(lifted.waypoints[1], lifted.waypoints[2], w), bc.length, 1e-12);
  EXPECT_NEAR(lifted.total_length, ab.length + bc.length, 1e-12);
}

TEST(LiftPath, TrivialGroupKeepsStoredVertices) {
  Rng rng(11);
  const auto g = share(make_trivial(2));
  const MetricWeights w = MetricWeights::uniform(1);
  Roadmap rm(g);
  std::vector<std::size_t> path;
  for (int i = 0; i < 6; ++i) path.push_back(rm.add_vertex(sample_uniform(planar(), rng)));
  for (int i = 0; i + 1 < 6; ++i) {
    const Config& t = rm.vertex(i + 1).q;
    rm.add_edge_pair(i, i + 1, EdgeEnd{t, dist_config(rm.vertex(i).q, t, w), 0});
  }
  const auto lifted = lift_path(rm, path, w);
  for (std::size_t i = 0; i < path.size(); ++i) EXPECT_EQ(dist_config(lifted.waypoints[i], rm.vertex(path[i]).q, w), 0.0);
}

TEST(LiftPath, MissingEdgeThrows) {
  Roadmap rm(share(make_cyclic_2d(2)));
  rm.add_vertex(Config::planar(0, 0, 0));
  rm.add_vertex(Config::planar(1, 0, 0));
  const std::vector<std::size_t> path{0, 1};
  EXPECT_THROW(lift_path(rm, path, MetricWeights::uniform(1)), std::invalid_argument);
}

TEST(LiftPath, LengthIsConservedOnRandomPaths) {
  Rng rng(12);
  const auto g = share(make_cyclic_2d(4));
  const MetricWeights w = MetricWeights::uniform(1, 0.5);
  Roadmap rm(g);
  const int n = 60;
  for (int i = 0; i < n; ++i) rm.add_vertex(sample_uniform(planar(), rng));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < 400; ++i) {
    const int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const QDist d = q_dist(*g, rm.vertex(a).q, rm.vertex(b).q, w);
    rm.add_edge_pair(a, b, EdgeEnd{act(*g, d.element, rm.vertex(b).q), d.length, d.element});
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> path{static_cast<std::size_t>(pick(rng))};
    double graph_length = 0.0;
    for (int step = 0; step < 12; ++step) {
      const auto out = rm.out_edges(path.back());
      if (out.empty()) break;
      std::uniform_int_distribution<std::size_t> choose(0, out.size() - 1);
      const auto& e = rm.edge(out[choose(rng)]);
      // lift_path uses the cheapest edge between a pair, as does the oracle here
      graph_length += rm.find_edge(e.source, e.target)->length;
      path.push_back(e.target);
    }
    const auto lifted = lift_path(rm, path, w);
    double recomputed = 0.0;
    for (std::size_t i = 1; i < lifted.waypoints.size(); ++i)
      recomputed += dist_config(lifted.waypoints[i - 1], lifted.waypoints[i], w);
    ASSERT_NEAR(lifted.total_length, graph_length, 1e-9);
    ASSERT_NEAR(recomputed, graph_length, 1e-9);
    for (std::size_t i = 0; i < path.size(); ++i)
      ASSERT_TRUE(project(lifted.waypoints[i], g).same_class(project(rm.vertex(path[i]).q, g)));
  }
}

TEST(Canonicalize, CyclicFourMinimumAngle) {
  const auto g = make_cyclic_2d(4);
  const Config c = canonicalize(Config::planar(0, 0, 85 * kDeg), g);
  // Orbit {85°, 175°, 265°, 355°}; the order picks the smallest angle.
  EXPECT_NEAR(std::get<Rotation2>(c[0].rotation).angle(), 85 * kDeg, 1e-12);
  const Config c2 = canonicalize(Config::planar(0, 0, 300 * kDeg), g);
  EXPECT_NEAR(std::get<Rotation2>(c2[0].rotation).angle(), 30 * kDeg, 1e-12);
}

TEST(Canonicalize, OrbitInvariantAndIdempotent) {
  Rng rng(13);
  for (const auto& c : cases()) {
    const MetricWeights w = MetricWeights::uniform(c.space.objects);
    for (int i = 0; i < 20; ++i) {
      const Config q = sample_uniform(c.space, rng);
      const Config k = canonicalize(q, *c.group);
      ASSERT_LT(dist_config(canonicalize(k, *c.group), k, w), 1e-12);
      for (std::size_t e = 0; e < c.group->order(); ++e)
        ASSERT_LT(dist_config(canonicalize(act(*c.group, e, q), *c.group), k, w), 1e-9);
    }
  }
}
