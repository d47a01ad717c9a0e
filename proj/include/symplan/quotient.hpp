#pragma once

// Planning primitives on the quotient Q/G: class distance with its minimizing
// group element, global and local samplers, the local planner, the directed
// roadmap that stores per-edge end points, and path lifting back to Q.

#include "symplan/collision.hpp"
#include "symplan/geometry.hpp"
#include "symplan/symmetry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace symplan {

struct QDist {
  double length = 0.0;
  std::size_t element = 0;  // g with dist(a, g·b) minimal; lowest index on ties
};

/// Distance between the classes of a and b. Each factor of the group is
/// minimized independently, so the cost is linear in the number of objects.
QDist q_dist(const SymmetryGroup& group, const Config& a, const Config& b, const MetricWeights& w);

/// An equivalence class [q], carried by one representative.
class ClassPoint {
 public:
  ClassPoint(Config representative, GroupPtr group);

  const Config& representative() const { return rep_; }
  const SymmetryGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  /// True when some element maps one representative onto the other within tol
  /// (translation and rotation distances measured with unit weights).
  bool same_class(const ClassPoint& other, double tol = 1e-9) const;

 private:
  Config rep_;
  GroupPtr group_;
};

/// Throws std::invalid_argument when the two points use different groups.
QDist q_dist(const ClassPoint& a, const ClassPoint& b, const MetricWeights& w);

ClassPoint project(Config q, GroupPtr group);
ClassPoint sample_global_q(const Space& space, GroupPtr group, Rng& rng);
ClassPoint sample_local_q(const ClassPoint& center, double r, const MetricWeights& w, Rng& rng);

struct EdgeEnd {
  Config endpoint;          // member of the target class reached by the geodesic
  double length = 0.0;
  std::size_t element = 0;  // endpoint = element · target representative
};

/// Collision-checks the minimizing geodesic from a's representative to the
/// nearest member of b's class. Returns nothing if that geodesic collides.
std::optional<EdgeEnd> local_plan(const ClassPoint& a, const ClassPoint& b, const World& world,
                                  std::span<const MovingObject> objects, double resolution,
                                  std::size_t* checks = nullptr);

/// Directed graph over classes. Each edge stores the end point it reaches in
/// the target class, so an edge and its reverse carry different end points.
class Roadmap {
 public:
  struct Vertex {
    Config q;
  };
  struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    Config endpoint;
    double length = 0.0;
    std::size_t element = 0;  // endpoint = element · q(target)
  };
  struct Checkpoint {
    std::size_t vertices = 0;
    std::size_t edges = 0;
  };

  explicit Roadmap(GroupPtr group);

  const SymmetryGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  std::size_t add_vertex(Config q);
  std::size_t add_edge(std::size_t source, std::size_t target, const EdgeEnd& end);
  /// Adds source→target and the reverse edge target→source, whose end point
  /// is element⁻¹ · q(source).
  void add_edge_pair(std::size_t source, std::size_t target, const EdgeEnd& end);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(std::size_t id) const { return vertices_.at(id); }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  std::span<const std::size_t> out_edges(std::size_t id) const { return adjacency_.at(id); }
  /// Cheapest edge source→target, if any.
  const Edge* find_edge(std::size_t source, std::size_t target) const;

  Checkpoint checkpoint() const { return {vertices_.size(), edges_.size()}; }
  /// Drops every vertex and edge added after the checkpoint.
  void rollback(const Checkpoint& cp);

 private:
  GroupPtr group_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct LiftedPath {
  std::vector<Config> waypoints;
  double total_length = 0.0;
};

/// Turns a vertex path into a sequence of configurations in Q whose piecewise
/// geodesic length equals the sum of the edge lengths. Throws
/// std::invalid_argument when consecutive vertices are not joined by an edge.
LiftedPath lift_path(const Roadmap& roadmap, std::span<const std::size_t> vertex_path, const MetricWeights& w);

/// Orbit member that is smallest in a fixed lexicographic order on rotation
/// coordinates (planar angle in [0, 2π); quaternion with w >= 0, then w, x, y, z).
Config canonicalize(const Config& q, const SymmetryGroup& group);

}  // namespace symplan
