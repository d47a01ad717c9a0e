#pragma once

// Convex collision checking for rigid symmetric objects among static convex
// obstacles. Touching counts as collision.

#include "symplan/geometry.hpp"
#include "symplan/symmetry.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace symplan {

struct Aabb {
  Eigen::Vector3d lo;
  Eigen::Vector3d hi;

  bool overlaps(const Aabb& other, int dim) const;
};

/// Convex polytope given by its hull vertices. Construction drops interior
/// points; planar shapes keep their vertices in counter-clockwise order.
class ConvexShape {
 public:
  ConvexShape(int dim, std::vector<Eigen::Vector3d> points);

  int dim() const { return dim_; }
  std::span<const Eigen::Vector3d> vertices() const { return vertices_; }
  Eigen::Vector3d centroid() const;
  /// Copy translated so the vertex centroid sits at the origin.
  ConvexShape centered() const;
  double circumradius() const;
  Aabb aabb() const;
  /// Planar shapes only.
  double area() const;

 private:
  int dim_;
  std::vector<Eigen::Vector3d> vertices_;
};

/// Hull vertices of a point set; throws std::invalid_argument when the set is
/// degenerate (collinear in 2D, coplanar in 3D).
std::vector<Eigen::Vector3d> convex_hull_2d(std::span<const Eigen::Vector3d> points);
std::vector<Eigen::Vector3d> convex_hull_3d(std::span<const Eigen::Vector3d> points);

class World {
 public:
  World(int dim, Bounds bounds, std::vector<ConvexShape> obstacles = {});

  int dim() const { return dim_; }
  const Bounds& bounds() const { return bounds_; }
  std::span<const ConvexShape> obstacles() const { return obstacles_; }
  std::span<const Aabb> obstacle_boxes() const { return boxes_; }

  /// Indices, ascending, of obstacles whose grid cells meet the box. A
  /// superset of the obstacles whose boxes overlap it.
  void candidates(const Aabb& box, std::vector<std::size_t>& out) const;

  World without_obstacle(std::size_t index) const;

 private:
  std::array<int, 3> cell_of(const Eigen::Vector3d& p) const;

  int dim_;
  Bounds bounds_;
  std::vector<ConvexShape> obstacles_;
  std::vector<Aabb> boxes_;
  // Uniform bucket grid over the bounds; obstacles outside are clamped in.
  std::array<int, 3> cells_{1, 1, 1};
  Eigen::Vector3d cell_size_ = Eigen::Vector3d::Ones();
  std::vector<std::vector<std::size_t>> grid_;
};

/// A rigid body whose shape is invariant under its symmetry group. The metric
/// weight defaults to the shape's circumradius.
struct MovingObject {
  MovingObject(std::string name, ConvexShape shape, GroupPtr symmetry, double weight = 0.0);

  std::string name;
  ConvexShape shape;
  GroupPtr symmetry;
  double weight;
};

MetricWeights weights_of(std::span<const MovingObject> objects);

/// World-frame vertices of a shape placed at a pose.
std::vector<Eigen::Vector3d> place(const ConvexShape& shape, const ObjectPose& pose);

bool polygons_intersect(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b);
bool polytopes_intersect(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b,
                         double margin = 1e-9);

/// True iff every object lies inside the bounds and touches neither an
/// obstacle nor another object.
bool is_free(const World& world, std::span<const MovingObject> objects, const Config& q);
bool is_free(const World& world, const MovingObject& object, const Config& q);

/// Discretized geodesic check with spacing at most `resolution` in the metric
/// induced by the objects' weights; endpoints included. The result does not
/// depend on the order of a and b.
bool edge_free(const World& world, std::span<const MovingObject> objects, const Config& a, const Config& b,
               double resolution, std::size_t* checks = nullptr);
bool edge_free(const World& world, const MovingObject& object, const Config& a, const Config& b,
               double resolution, std::size_t* checks = nullptr);

struct SymmetryCheck {
  bool ok = true;
  double max_deviation = 0.0;
};

/// Checks that every element of the object's group maps its vertex set onto
/// itself within tol.
SymmetryCheck check_object_symmetry(const MovingObject& object, double tol = 1e-9);

// Catalog of body shapes, centered at their vertex centroid.
ConvexShape regular_polygon(int sides, double circumradius);
ConvexShape rectangle(double length, double width);
ConvexShape regular_pyramid(int sides, double base_radius, double height);
ConvexShape regular_prism(int sides, double radius, double height);
ConvexShape regular_tetrahedron(double circumradius);
ConvexShape cube(double half_side);

}  // namespace symplan
