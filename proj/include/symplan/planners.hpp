#pragma once

// Sampling-based planners over Q/G. Every planner talks to the space only
// through PlanningSpace, so the symmetry-unaware baseline is the same code
// run with the trivial group.

#include "symplan/collision.hpp"
#include "symplan/geometry.hpp"
#include "symplan/quotient.hpp"
#include "symplan/symmetry.hpp"
#include "symplan/worldgen.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symplan {

/// Group acting on a list of objects: the object's own group for one
/// object, the direct product of the per-object groups otherwise.
GroupPtr joint_group(std::span<const MovingObject> objects);

class PlanningSpace {
 public:
  PlanningSpace(World world, std::vector<MovingObject> objects, GroupPtr group);

  /// Uses joint_group(objects).
  static PlanningSpace aware(World world, std::vector<MovingObject> objects);
  /// Uses the trivial group of the world's dimension.
  static PlanningSpace unaware(World world, std::vector<MovingObject> objects);

  const World& world() const { return world_; }
  std::span<const MovingObject> objects() const { return objects_; }
  const SymmetryGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const MetricWeights& weights() const { return weights_; }
  const Space& space() const { return space_; }
  /// Manifold dimension d of Q.
  std::size_t dimension() const { return space_.manifold_dim(); }

  QDist dist(const Config& a, const Config& b) const { return q_dist(*group_, a, b, weights_); }
  Config sample(Rng& rng) const { return sample_uniform(space_, rng); }
  bool is_free(const Config& q, std::size_t* checks = nullptr) const;
  bool segment_free(const Config& a, const Config& b, double resolution, std::size_t* checks = nullptr) const;
  /// Local planner between the classes of a and b.
  std::optional<EdgeEnd> connect(const Config& a, const Config& b, double resolution,
                                 std::size_t* checks = nullptr) const;

 private:
  World world_;
  std::vector<MovingObject> objects_;
  GroupPtr group_;
  MetricWeights weights_;
  Space space_;
};

struct PlannerParams {
  std::size_t max_samples = 1000;
  double eta = 1.0;          // RRT-family step
  double rho_rrt = 10.0;     // RRT* radius scale
  double rho_prm = 10.0;     // radius-PRM* scale
  double knn_k_const = 0.0;  // <= 0 means e·(1 + 1/d)
  double resolution = 0.01;
  std::uint64_t seed = 0;
};

enum class PlanStatus { success, exhausted, infeasible_endpoints };

std::string to_string(PlanStatus status);

struct PhaseTimes {
  double sampling_s = 0.0;
  double nearest_s = 0.0;
  double local_plan_s = 0.0;
  double graph_s = 0.0;
};

struct PlanResult {
  PlanStatus status = PlanStatus::exhausted;
  LiftedPath path;
  double length = 0.0;
  std::size_t samples = 0;
  std::size_t vertices = 0;
  std::size_t collision_checks = 0;
  double wall_time_s = 0.0;
  PhaseTimes phases;
  /// RRT* only: (samples drawn, best cost) each time the cost changes.
  std::vector<std::pair<std::size_t, double>> cost_trace;

  bool success() const { return status == PlanStatus::success; }
};

PlanResult rrt(const Problem& problem, const PlanningSpace& space, const PlannerParams& params);
PlanResult birrt(const Problem& problem, const PlanningSpace& space, const PlannerParams& params);
PlanResult rrt_star(const Problem& problem, const PlanningSpace& space, const PlannerParams& params);

enum class PrmVariant { knn, radius };

struct PrmResult {
  std::size_t roadmap_vertices = 0;
  std::size_t roadmap_edges = 0;
  std::size_t samples = 0;
  double build_time_s = 0.0;
  std::size_t build_collision_checks = 0;
  std::vector<PlanResult> queries;
  std::optional<Roadmap> roadmap;  // the built roadmap, without query vertices
};

/// Builds one roadmap from max_samples global samples and answers every
/// problem against it. Query vertices are removed again after each query.
PrmResult prm_star(std::span<const Problem> problems, const PlanningSpace& space, const PlannerParams& params,
                   PrmVariant variant);
PlanResult prm_star(const Problem& problem, const PlanningSpace& space, const PlannerParams& params,
                    PrmVariant variant);

/// k(n) = ceil(k_const · log n).
std::size_t prm_star_k(std::size_t n, double k_const);
/// r(n) = rho · (log n / n)^(1/d).
double prm_star_radius(std::size_t n, double rho, std::size_t d);
/// r(n) = min(eta, rho · (log n / n)^(1/(d+1))).
double rrt_star_radius(std::size_t n, double rho, double eta, std::size_t d);

/// Minimal-length directed path by Dijkstra; ties resolved toward smaller
/// vertex ids. Throws std::runtime_error when goal is unreachable.
std::vector<std::size_t> shortest_path(const Roadmap& roadmap, std::size_t start, std::size_t goal);

struct PathCheck {
  bool start_ok = false;
  bool goal_ok = false;
  bool segments_free = false;
  bool length_ok = false;
  double length_error = 0.0;

  bool ok() const { return start_ok && goal_ok && segments_free && length_ok; }
};

/// Re-validates a successful result: endpoint classes, collision-free
/// segments and the reported length.
PathCheck validate_path(const PlanResult& result, const Problem& problem, const PlanningSpace& space,
                        double resolution, double tol = 1e-9);

}  // namespace symplan
