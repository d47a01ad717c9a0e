#pragma once

// Riemannian primitives for SO(2), SO(3), SE(2), SE(3) and finite products of
// them: distances, geodesics, and the samplers used by the planners.

#include <Eigen/Geometry>

#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <variant>
#include <vector>

namespace symplan {

using Rng = std::mt19937_64;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Planar rotation. The angle is always kept in [0, 2π).
class Rotation2 {
 public:
  Rotation2() = default;
  explicit Rotation2(double angle);

  double angle() const { return angle_; }
  Rotation2 operator*(const Rotation2& other) const { return Rotation2(angle_ + other.angle_); }
  Rotation2 inverse() const { return Rotation2(-angle_); }
  Eigen::Vector2d rotate(const Eigen::Vector2d& v) const;

 private:
  double angle_ = 0.0;
};

/// Spatial rotation stored as a unit quaternion. q and -q describe the same
/// orientation; use same_orientation() rather than comparing coefficients.
class Rotation3 {
 public:
  Rotation3() : q_(Eigen::Quaterniond::Identity()) {}
  explicit Rotation3(const Eigen::Quaterniond& q);

  static Rotation3 from_axis_angle(const Eigen::Vector3d& axis, double angle);

  const Eigen::Quaterniond& quaternion() const { return q_; }
  Rotation3 operator*(const Rotation3& other) const { return Rotation3(q_ * other.q_); }
  Rotation3 inverse() const;
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const { return q_ * v; }
  Eigen::Matrix3d matrix() const { return q_.toRotationMatrix(); }

  /// Rotation angle in [0, π].
  double angle() const;
  bool same_orientation(const Rotation3& other, double tol = 1e-12) const;

 private:
  Eigen::Quaterniond q_;
};

using Rotation = std::variant<Rotation2, Rotation3>;

Rotation compose(const Rotation& a, const Rotation& b);
Rotation inverse(const Rotation& r);
Rotation identity_rotation(int dim);
int rotation_dim(const Rotation& r);

/// Pose of one rigid body. Planar poses keep translation.z() == 0.
struct ObjectPose {
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Rotation rotation = Rotation2{};
};

/// A point of the configuration space: one pose per rigid body, all sharing
/// the same ambient dimension.
class Config {
 public:
  Config(int dim, std::vector<ObjectPose> objects);

  static Config planar(double x, double y, double angle);
  static Config spatial(const Eigen::Vector3d& translation, const Rotation3& rotation);

  int dim() const { return dim_; }
  std::size_t size() const { return objects_.size(); }
  const ObjectPose& operator[](std::size_t i) const { return objects_[i]; }
  std::span<const ObjectPose> objects() const { return objects_; }

  void set_translation(std::size_t i, const Eigen::Vector3d& t);
  void set_rotation(std::size_t i, const Rotation& r);

 private:
  int dim_;
  std::vector<ObjectPose> objects_;
};

/// Meters per radian for each object's rotation component.
class MetricWeights {
 public:
  explicit MetricWeights(std::vector<double> rotation_weights);
  static MetricWeights uniform(std::size_t objects, double weight = 1.0);

  double operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

/// Axis-aligned translation box. Planar spaces ignore the z extent.
struct Bounds {
  Eigen::Vector3d lo = Eigen::Vector3d::Zero();
  Eigen::Vector3d hi = Eigen::Vector3d::Zero();

  static Bounds box2d(double x0, double y0, double x1, double y1);
  static Bounds box3d(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi);

  double volume(int dim) const;
  bool contains(const Eigen::Vector3d& p, int dim) const;
};

/// Describes a product of SE(dim) copies with a shared translation box.
struct Space {
  int dim = 2;
  std::size_t objects = 1;
  Bounds bounds;

  /// Manifold dimension of the configuration space.
  std::size_t manifold_dim() const { return objects * (dim == 2 ? 3 : 6); }
};

double dist_so2(const Rotation2& a, const Rotation2& b);
double dist_so3(const Rotation3& a, const Rotation3& b);
double dist_rotation(const Rotation& a, const Rotation& b);

/// sqrt(sum over objects of |Δt|² + (w·Δθ)²).
double dist_config(const Config& a, const Config& b, const MetricWeights& w);

/// Point at fraction t along the minimizing geodesic from a to b. Throws
/// std::domain_error when some rotation pair is antipodal.
Config geodesic(const Config& a, const Config& b, double t);

Rotation3 sample_uniform_so3(Rng& rng);
Config sample_uniform(const Space& space, Rng& rng);

/// Uniform point in the planar disk / spatial ball of radius r (z = 0 in 2D).
Eigen::Vector3d sample_translation_ball(int dim, double r, Rng& rng);

/// Uniform (Haar) sample from the SO(3) geodesic ball of the given angle.
Rotation3 sample_so3_ball(double max_angle, Rng& rng);

/// Sample with dist_config(center, result, w) <= r. The density is positive
/// on the whole ball but not uniform.
Config sample_ball(const Config& center, double r, const MetricWeights& w, Rng& rng);

/// Volume of the Euclidean unit ball in R^d.
double unit_ball_volume(std::size_t d);

/// Metric volume of one object's rotation factor (2πw or 8π²w³).
double rotation_volume(int dim, double weight);

}  // namespace symplan
