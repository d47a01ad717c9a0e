#pragma once

// Seeded random worlds: planar alpha-shape triangles and spatial cluster
// hulls, plus collision-free start/goal problems.

#include "symplan/collision.hpp"
#include "symplan/geometry.hpp"
#include "symplan/symmetry.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace symplan {

struct WorldGenParams {
  int dim = 2;
  Bounds bounds = Bounds::box2d(0.0, 0.0, 10.0, 10.0);
  int points = 60;       // 2D: total points; 3D: points per cluster
  double alpha = 1.1;    // 2D: triangles with circumradius below alpha are kept
  int clusters = 30;     // 3D
  double spread = 1.2;   // 3D: half-width of a cluster's point cube
  std::uint64_t seed = 0;
  int max_retries = 8;

  static WorldGenParams defaults(int dim);
};

using Triangle = std::array<std::size_t, 3>;

/// Delaunay triangulation (Bowyer-Watson); triangles listed counter-clockwise.
std::vector<Triangle> delaunay_2d(std::span<const Eigen::Vector2d> points);

/// Triangles of the Delaunay triangulation whose circumradius is below alpha.
std::vector<Triangle> alpha_shape_2d(std::span<const Eigen::Vector2d> points, double alpha);

World gen_world_2d(const WorldGenParams& params);
World gen_world_3d(const WorldGenParams& params);
World gen_world(const WorldGenParams& params);

struct Problem {
  Config start;
  Config goal;
};

/// Rejection-samples a free start and goal in distinct classes. Throws
/// std::runtime_error when the budget runs out.
Problem gen_problem(const World& world, std::span<const MovingObject> objects, const SymmetryGroup& group,
                    const MetricWeights& w, Rng& rng, int budget = 100000);

}  // namespace symplan
