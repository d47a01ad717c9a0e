#include "symplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symplan {

namespace {

constexpr double kAntipodalTol = 1e-12;

double reduce_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

// Angle between two unit 4-vectors after sign folding, i.e. half the
// rotation angle. atan2 keeps full precision near 0 and π/2.
double half_angle(const Eigen::Vector4d& p, const Eigen::Vector4d& q) {
  const double diff = (p - q).norm();
  const double sum = (p + q).norm();
  return 2.0 * std::atan2(std::min(diff, sum), std::max(diff, sum));
}

void require_same_shape(const Config& a, const Config& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw std::invalid_argument("configs differ in dimension or object count");
  }
}

}  // namespace

Rotation2::Rotation2(double angle) : angle_(reduce_angle(angle)) {}

Eigen::Vector2d Rotation2::rotate(const Eigen::Vector2d& v) const {
  const double c = std::cos(angle_);
  const double s = std::sin(angle_);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

Rotation3::Rotation3(const Eigen::Quaterniond& q) : q_(q) {
  const double n = q_.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw std::invalid_argument("quaternion must be finite and nonzero");
  }
  q_.coeffs() /= n;
}

Rotation3 Rotation3::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 1e-12)) throw std::invalid_argument("rotation axis must be nonzero");
  return Rotation3(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis / n)));
}

Rotation3 Rotation3::inverse() const { return Rotation3(q_.conjugate()); }

double Rotation3::angle() const { return dist_so3(Rotation3(), *this); }

bool Rotation3::same_orientation(const Rotation3& other, double tol) const {
  return dist_so3(*this, other) <= tol;
}

Rotation compose(const Rotation& a, const Rotation& b) {
  if (const auto* a2 = std::get_if<Rotation2>(&a)) {
    return *a2 * std::get<Rotation2>(b);
  }
  return std::get<Rotation3>(a) * std::get<Rotation3>(b);
}

Rotation inverse(const Rotation& r) {
  return std::visit([](const auto& x) -> Rotation { return x.inverse(); }, r);
}

Rotation identity_rotation(int dim) {
  if (dim == 2) return Rotation2{};
  if (dim == 3) return Rotation3{};
  throw std::invalid_argument("dimension must be 2 or 3");
}

int rotation_dim(const Rotation& r) { return std::holds_alternative<Rotation2>(r) ? 2 : 3; }

Config::Config(int dim, std::vector<ObjectPose> objects) : dim_(dim), objects_(std::move(objects)) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (objects_.empty()) throw std::invalid_argument("config needs at least one object");
  for (const auto& o : objects_) {
    if (rotation_dim(o.rotation) != dim) {
      throw std::invalid_argument("object rotation does not match config dimension");
    }
    if (dim == 2 && o.translation.z() != 0.0) {
      throw std::invalid_argument("planar translation must have z = 0");
    }
  }
}

Config Config::planar(double x, double y, double angle) {
  return Config(2, {ObjectPose{{x, y, 0.0}, Rotation2(angle)}});
}

Config Config::spatial(const Eigen::Vector3d& translation, const Rotation3& rotation) {
  return Config(3, {ObjectPose{translation, rotation}});
}

void Config::set_translation(std::size_t i, const Eigen::Vector3d& t) {
  if (dim_ == 2 && t.z() != 0.0) throw std::invalid_argument("planar translation must have z = 0");
  objects_.at(i).translation = t;
}

void Config::set_rotation(std::size_t i, const Rotation& r) {
  if (rotation_dim(r) != dim_) throw std::invalid_argument("rotation does not match config dimension");
  objects_.at(i).rotation = r;
}

MetricWeights::MetricWeights(std::vector<double> rotation_weights) : weights_(std::move(rotation_weights)) {
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("rotation weights must be positive");
  }
}

MetricWeights MetricWeights::uniform(std::size_t objects, double weight) {
  return MetricWeights(std::vector<double>(objects, weight));
}

Bounds Bounds::box2d(double x0, double y0, double x1, double y1) {
  return box3d({x0, y0, 0.0}, {x1, y1, 0.0});
}

Bounds Bounds::box3d(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi) {
  if ((hi.array() < lo.array()).any()) throw std::invalid_argument("bounds must satisfy lo <= hi");
  return Bounds{lo, hi};
}

double Bounds::volume(int dim) const {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= hi[i] - lo[i];
  return v;
}

bool Bounds::contains(const Eigen::Vector3d& p, int dim) const {
  for (int i = 0; i < dim; ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

double dist_so2(const Rotation2& a, const Rotation2& b) {
  const double d = std::abs(a.angle() - b.angle());
  return std::min(d, kTwoPi - d);
}

double dist_so3(const Rotation3& a, const Rotation3& b) {
  return 2.0 * half_angle(a.quaternion().coeffs(), b.quaternion().coeffs());
}

double dist_rotation(const Rotation& a, const Rotation& b) {
  if (const auto* a2 = std::get_if<Rotation2>(&a)) return dist_so2(*a2, std::get<Rotation2>(b));
  return dist_so3(std::get<Rotation3>(a), std::get<Rotation3>(b));
}

double dist_config(const Config& a, const Config& b, const MetricWeights& w) {
  require_same_shape(a, b);
  if (w.size() != a.size()) throw std::invalid_argument("metric weights do not match object count");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double rot = w[i] * dist_rotation(a[i].rotation, b[i].rotation);
    sum += (a[i].translation - b[i].translation).squaredNorm() + rot * rot;
  }
  return std::sqrt(sum);
}

Config geodesic(const Config& a, const Config& b, double t) {
  require_same_shape(a, b);
  std::vector<ObjectPose> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ObjectPose pose;
    pose.translation = a[i].translation + t * (b[i].translation - a[i].translation);
    if (const auto* ra = std::get_if<Rotation2>(&a[i].rotation)) {
      const auto& rb = std::get<Rotation2>(b[i].rotation);
      const double delta = std::remainder(rb.angle() - ra->angle(), kTwoPi);
      if (kPi - std::abs(delta) < kAntipodalTol) {
        throw std::domain_error("antipodal planar rotations have no unique geodesic");
      }
      pose.rotation = Rotation2(ra->angle() + t * delta);
    } else {
      const Eigen::Vector4d p = std::get<Rotation3>(a[i].rotation).quaternion().coeffs();
      Eigen::Vector4d q = std::get<Rotation3>(b[i].rotation).quaternion().coeffs();
      if (p.dot(q) < 0.0) q = -q;
      const double half = half_angle(p, q);
      if (kPi - 2.0 * half < kAntipodalTol) {
        throw std::domain_error("antipodal spatial rotations have no unique geodesic");
      }
      Eigen::Vector4d r;
      if (half < 1e-12) {
        r = p + t * (q - p);
      } else {
        const double s = std::sin(half);
        r = (std::sin((1.0 - t) * half) / s) * p + (std::sin(t * half) / s) * q;
      }
      pose.rotation = Rotation3(Eigen::Quaterniond(r));
    }
    out.push_back(std::move(pose));
  }
  return Config(a.dim(), std::move(out));
}

Rotation3 sample_uniform_so3(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const Eigen::Vector4d v(normal(rng), normal(rng), normal(rng), normal(rng));
    if (v.norm() > 1e-6) return Rotation3(Eigen::Quaterniond(v));
  }
}

Config sample_uniform(const Space& space, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ObjectPose> objects;
  objects.reserve(space.objects);
  for (std::size_t i = 0; i < space.objects; ++i) {
    ObjectPose pose;
    for (int k = 0; k < space.dim; ++k) {
      pose.translation[k] = space.bounds.lo[k] + unit(rng) * (space.bounds.hi[k] - space.bounds.lo[k]);
    }
    if (space.dim == 2) {
      pose.rotation = Rotation2(kTwoPi * unit(rng));
    } else {
      pose.rotation = sample_uniform_so3(rng);
    }
    objects.push_back(std::move(pose));
  }
  return Config(space.dim, std::move(objects));
}

Eigen::Vector3d sample_translation_ball(int dim, double r, Rng& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::Vector3d dir = Eigen::Vector3d::Zero();
  double n = 0.0;
  while (n < 1e-12) {
    for (int k = 0; k < dim; ++k) dir[k] = normal(rng);
    n = dir.norm();
  }
  return dir * (r * std::pow(unit(rng), 1.0 / dim) / n);
}

Rotation3 sample_so3_ball(double max_angle, Rng& rng) {
  max_angle = std::min(max_angle, kPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Haar density of the rotation angle is proportional to sin²(θ/2).
  const double peak = std::pow(std::sin(0.5 * max_angle), 2);
  double theta = 0.0;
  for (;;) {
    theta = max_angle * unit(rng);
    if (unit(rng) * peak <= std::pow(std::sin(0.5 * theta), 2)) break;
  }
  Eigen::Vector3d axis = sample_translation_ball(3, 1.0, rng);
  while (axis.norm() < 1e-9) axis = sample_translation_ball(3, 1.0, rng);
  return Rotation3::from_axis_angle(axis, theta);
}

Config sample_ball(const Config& center, double r, const MetricWeights& w, Rng& rng) {
  if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
  if (w.size() != center.size()) throw std::invalid_argument("metric weights do not match object count");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    std::vector<ObjectPose> objects;
    objects.reserve(center.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
      const double max_angle = std::min(r / w[i], kPi);
      ObjectPose pose;
      pose.translation = center[i].translation + sample_translation_ball(center.dim(), r, rng);
      if (const auto* c2 = std::get_if<Rotation2>(&center[i].rotation)) {
        pose.rotation = Rotation2(c2->angle() + max_angle * unit(rng));
      } else {
        pose.rotation = std::get<Rotation3>(center[i].rotation) * sample_so3_ball(max_angle, rng);
      }
      objects.push_back(std::move(pose));
    }
    Config candidate(center.dim(), std::move(objects));
    if (dist_config(center, candidate, w) <= r) return candidate;
  }
}

double unit_ball_volume(std::size_t d) {
  const double half = 0.5 * static_cast<double>(d);
  return std::pow(kPi, half) / std::tgamma(half + 1.0);
}

double rotation_volume(int dim, double weight) {
  if (dim == 2) return kTwoPi * weight;
  if (dim == 3) return 8.0 * kPi * kPi * weight * weight * weight;
  throw std::invalid_argument("dimension must be 2 or 3");
}

}  // namespace symplan
