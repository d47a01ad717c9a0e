#include "symplan/worldgen.hpp"

#include "symplan/parallel.hpp"
#include "symplan/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

namespace symplan {

namespace {

struct Circle {
  Eigen::Vector2d center;
  double r2 = 0.0;
};

double orient(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

Circle circumcircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const Eigen::Vector2d ab = b - a;
  const Eigen::Vector2d ac = c - a;
  const double d = 2.0 * (ab.x() * ac.y() - ab.y() * ac.x());
  const double ab2 = ab.squaredNorm();
  const double ac2 = ac.squaredNorm();
  const Eigen::Vector2d off((ac.y() * ab2 - ab.y() * ac2) / d, (ab.x() * ac2 - ac.x() * ab2) / d);
  return {a + off, off.squaredNorm()};
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

void check_params(const WorldGenParams& p, int dim) {
  if (p.dim != dim) throw std::invalid_argument("world generator called with the wrong dimension");
  if (p.points <= 0) throw std::invalid_argument("point count must be positive");
  if (dim == 2 && !(p.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (dim == 3 && (p.clusters <= 0 || !(p.spread > 0.0))) {
    throw std::invalid_argument("cluster count and spread must be positive");
  }
  if (p.max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
}

}  // namespace

WorldGenParams WorldGenParams::defaults(int dim) {
  WorldGenParams p;
  p.dim = dim;
  if (dim == 3) {
    p.bounds = Bounds::box3d(Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(10.0));
    p.points = 20;
  } else if (dim != 2) {
    throw std::invalid_argument("dimension must be 2 or 3");
  }
  return p;
}

std::vector<Triangle> delaunay_2d(std::span<const Eigen::Vector2d> points) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("triangulation needs at least 3 points");
  Eigen::Vector2d lo = points[0];
  Eigen::Vector2d hi = points[0];
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double extent = std::max((hi - lo).maxCoeff(), 1e-9);
  const Eigen::Vector2d mid = 0.5 * (lo + hi);

  std::vector<Eigen::Vector2d> pts(points.begin(), points.end());
  pts.push_back(mid + Eigen::Vector2d(-100.0 * extent, -100.0 * extent));
  pts.push_back(mid + Eigen::Vector2d(100.0 * extent, -100.0 * extent));
  pts.push_back(mid + Eigen::Vector2d(0.0, 100.0 * extent));

  struct Tri {
    Triangle v;
    Circle c;
  };
  auto make = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (orient(pts[a], pts[b], pts[c]) < 0.0) std::swap(b, c);
    return Tri{{a, b, c}, circumcircle(pts[a], pts[b], pts[c])};
  };
  std::vector<Tri> tris{make(n, n + 1, n + 2)};

  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& p = pts[i];
    std::vector<Tri> keep;
    std::map<std::pair<std::size_t, std::size_t>, int> boundary;  // directed edge -> count
    for (const auto& t : tris) {
      if ((p - t.c.center).squaredNorm() < t.c.r2) {
        for (int k = 0; k < 3; ++k) {
          const std::size_t a = t.v[k];
          const std::size_t b = t.v[(k + 1) % 3];
          boundary[{a, b}] += 1;
        }
      } else {
        keep.push_back(t);
      }
    }
    for (const auto& [edge, count] : boundary) {
      // Interior edges appear once in each direction.
      if (boundary.count({edge.second, edge.first}) > 0) continue;
      if (std::abs(orient(pts[edge.first], pts[edge.second], p)) <= 1e-18) continue;
      keep.push_back(make(edge.first, edge.second, i));
    }
    tris = std::move(keep);
  }

  std::vector<Triangle> out;
  for (const auto& t : tris) {
    if (t.v[0] < n && t.v[1] < n && t.v[2] < n) out.push_back(t.v);
  }
  if (out.empty()) throw std::invalid_argument("degenerate point set (collinear)");
  return out;
}

std::vector<Triangle> alpha_shape_2d(std::span<const Eigen::Vector2d> points, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  std::vector<Triangle> out;
  for (const auto& t : delaunay_2d(points)) {
    const Circle c = circumcircle(points[t[0]], points[t[1]], points[t[2]]);
    if (std::sqrt(c.r2) < alpha) out.push_back(t);
  }
  return out;
}

World gen_world_2d(const WorldGenParams& params) {
  check_params(params, 2);
  const Bounds& b = params.bounds;
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    Rng rng = substream_rng(params.seed, static_cast<std::uint64_t>(attempt));
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(static_cast<std::size_t>(params.points));
    for (int i = 0; i < params.points; ++i) {
      const double x = uniform(rng, b.lo.x(), b.hi.x());
      const double y = uniform(rng, b.lo.y(), b.hi.y());
      pts.emplace_back(x, y);
    }
    try {
      std::vector<ConvexShape> obstacles;
      for (const auto& t : alpha_shape_2d(pts, params.alpha)) {
        std::vector<Eigen::Vector3d> tri;
        for (std::size_t k : t) tri.emplace_back(pts[k].x(), pts[k].y(), 0.0);
        if (std::abs(orient(pts[t[0]], pts[t[1]], pts[t[2]])) < 1e-12) continue;  // sliver
        obstacles.emplace_back(2, std::move(tri));
      }
      return World(2, b, std::move(obstacles));
    } catch (const std::invalid_argument&) {
      // degenerate sample; draw again from the next substream
    }
  }
  throw std::runtime_error("world generation failed after max_retries attempts");
}

World gen_world_3d(const WorldGenParams& params) {
  check_params(params, 3);
  const Bounds& b = params.bounds;
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    Rng rng = substream_rng(params.seed, static_cast<std::uint64_t>(attempt));
    try {
      std::vector<ConvexShape> obstacles;
      for (int c = 0; c < params.clusters; ++c) {
        Eigen::Vector3d center;
        for (int k = 0; k < 3; ++k) {
          const double lo = b.lo[k] + params.spread;
          const double hi = b.hi[k] - params.spread;
          center[k] = lo < hi ? uniform(rng, lo, hi) : 0.5 * (b.lo[k] + b.hi[k]);
        }
        std::vector<Eigen::Vector3d> pts;
        for (int i = 0; i < params.points; ++i) {
          Eigen::Vector3d p;
          for (int k = 0; k < 3; ++k) {
            p[k] = std::clamp(center[k] + uniform(rng, -params.spread, params.spread), b.lo[k], b.hi[k]);
          }
          pts.push_back(p);
        }
        obstacles.emplace_back(3, std::move(pts));
      }
      return World(3, b, std::move(obstacles));
    } catch (const std::invalid_argument&) {
      // coplanar cluster; retry
    }
  }
  throw std::runtime_error("world generation failed after max_retries attempts");
}

World gen_world(const WorldGenParams& params) {
  return params.dim == 3 ? gen_world_3d(params) : gen_world_2d(params);
}

Problem gen_problem(const World& world, std::span<const MovingObject> objects, const SymmetryGroup& group,
                    const MetricWeights& w, Rng& rng, int budget) {
  const Space space{world.dim(), objects.size(), world.bounds()};
  auto draw_free = [&]() -> std::optional<Config> {
    while (budget-- > 0) {
      Config q = sample_uniform(space, rng);
      if (is_free(world, objects, q)) return q;
    }
    return std::nullopt;
  };
  auto start = draw_free();
  if (!start) throw std::runtime_error("no free start configuration within the sampling budget");
  while (true) {
    auto goal = draw_free();
    if (!goal) throw std::runtime_error("no free goal configuration within the sampling budget");
    if (q_dist(group, *start, *goal, w).length > 1e-9) return {std::move(*start), std::move(*goal)};
  }
}

}  // namespace symplan
