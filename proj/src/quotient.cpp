#include "symplan/quotient.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symplan {

namespace {

struct FactorMin {
  std::size_t index = 0;
  double angle = 0.0;
};

FactorMin minimize_factor(const SymmetryGroup::Factor& f, const Rotation& a, const Rotation& b) {
  FactorMin best{0, std::numeric_limits<double>::infinity()};
  if (const auto* a2 = std::get_if<Rotation2>(&a)) {
    const double alpha = a2->angle();
    const double beta = std::get<Rotation2>(b).angle();
    for (std::size_t k = 0; k < f.order(); ++k) {
      const double g = std::get<Rotation2>(f.elements[k]).angle();
      const double d = std::abs(std::remainder(beta - g - alpha, kTwoPi));
      if (d < best.angle) best = {k, d};
    }
    return best;
  }
  const auto& qa = std::get<Rotation3>(a);
  const auto& qb = std::get<Rotation3>(b);
  // angle(a⁻¹ b g⁻¹) decreases as |<a⁻¹ b, g>| grows.
  const Eigen::Vector4d rel = (qa.quaternion().conjugate() * qb.quaternion()).coeffs();
  double best_dot = -1.0;
  for (std::size_t k = 0; k < f.order(); ++k) {
    const double d = std::abs(rel.dot(std::get<Rotation3>(f.elements[k]).quaternion().coeffs()));
    if (d > best_dot) {
      best_dot = d;
      best.index = k;
    }
  }
  best.angle = dist_so3(qa, qb * std::get<Rotation3>(f.inverses[best.index]));
  return best;
}

bool same_group(const SymmetryGroup& a, const SymmetryGroup& b) {
  if (&a == &b) return true;
  return a.dim() == b.dim() && a.order() == b.order() && a.descriptor().kind == b.descriptor().kind &&
         a.descriptor().kind != "custom" && a.factors().size() == b.factors().size();
}

// Lexicographic key of a rotation for canonicalization.
Eigen::Vector4d rotation_key(const Rotation& r) {
  if (const auto* r2 = std::get_if<Rotation2>(&r)) return {r2->angle(), 0.0, 0.0, 0.0};
  const auto& q = std::get<Rotation3>(r).quaternion();
  Eigen::Vector4d key(q.w(), q.x(), q.y(), q.z());
  for (int k = 0; k < 4; ++k) {
    if (std::abs(key[k]) > 1e-12) {
      if (key[k] < 0.0) key = -key;
      break;
    }
  }
  return key;
}

bool key_less(const Eigen::Vector4d& a, const Eigen::Vector4d& b, double tol) {
  for (int k = 0; k < 4; ++k) {
    if (a[k] < b[k] - tol) return true;
    if (a[k] > b[k] + tol) return false;
  }
  return false;
}

}  // namespace

QDist q_dist(const SymmetryGroup& group, const Config& a, const Config& b, const MetricWeights& w) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw std::invalid_argument("configs differ in dimension or object count");
  }
  if (group.dim() != a.dim()) throw std::invalid_argument("group and config dimensions differ");
  if (w.size() != a.size()) throw std::invalid_argument("metric weights do not match object count");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += (a[i].translation - b[i].translation).squaredNorm();
    if (group.factor_for_object(i) == nullptr) {
      const double r = w[i] * dist_rotation(a[i].rotation, b[i].rotation);
      sum += r * r;
    }
  }
  std::size_t element = 0;
  std::size_t stride = 1;
  for (const auto& f : group.factors()) {
    if (f.object >= a.size()) throw std::out_of_range("group acts on an object the config does not have");
    const FactorMin m = minimize_factor(f, a[f.object].rotation, b[f.object].rotation);
    const double r = w[f.object] * m.angle;
    sum += r * r;
    element += m.index * stride;
    stride *= f.order();
  }
  return {std::sqrt(sum), element};
}

ClassPoint::ClassPoint(Config representative, GroupPtr group) : rep_(std::move(representative)), group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("class point needs a group");
  if (group_->dim() != rep_.dim()) throw std::invalid_argument("group and config dimensions differ");
}

bool ClassPoint::same_class(const ClassPoint& other, double tol) const {
  return q_dist(*this, other, MetricWeights::uniform(rep_.size())).length <= tol;
}

QDist q_dist(const ClassPoint& a, const ClassPoint& b, const MetricWeights& w) {
  if (!same_group(a.group(), b.group())) throw std::invalid_argument("class points belong to different groups");
  return q_dist(a.group(), a.representative(), b.representative(), w);
}

ClassPoint project(Config q, GroupPtr group) { return ClassPoint(std::move(q), std::move(group)); }

ClassPoint sample_global_q(const Space& space, GroupPtr group, Rng& rng) {
  return project(sample_uniform(space, rng), std::move(group));
}

ClassPoint sample_local_q(const ClassPoint& center, double r, const MetricWeights& w, Rng& rng) {
  return project(sample_ball(center.representative(), r, w, rng), center.group_ptr());
}

std::optional<EdgeEnd> local_plan(const ClassPoint& a, const ClassPoint& b, const World& world,
                                  std::span<const MovingObject> objects, double resolution, std::size_t* checks) {
  const QDist d = q_dist(a, b, weights_of(objects));
  Config end = act(a.group(), d.element, b.representative());
  try {
    if (!edge_free(world, objects, a.representative(), end, resolution, checks)) return std::nullopt;
  } catch (const std::domain_error&) {
    return std::nullopt;  // antipodal pair: no unique geodesic to check
  }
  return EdgeEnd{std::move(end), d.length, d.element};
}

Roadmap::Roadmap(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("roadmap needs a group");
}

std::size_t Roadmap::add_vertex(Config q) {
  vertices_.push_back({std::move(q)});
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t Roadmap::add_edge(std::size_t source, std::size_t target, const EdgeEnd& end) {
  if (source >= vertices_.size() || target >= vertices_.size()) throw std::out_of_range("edge vertex out of range");
  edges_.push_back({source, target, end.endpoint, end.length, end.element});
  adjacency_[source].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

void Roadmap::add_edge_pair(std::size_t source, std::size_t target, const EdgeEnd& end) {
  add_edge(source, target, end);
  const std::size_t back = group_->inverse(end.element);
  add_edge(target, source, EdgeEnd{act(*group_, back, vertices_[source].q), end.length, back});
}

const Roadmap::Edge* Roadmap::find_edge(std::size_t source, std::size_t target) const {
  const Edge* best = nullptr;
  for (std::size_t e : adjacency_.at(source)) {
    const Edge& edge = edges_[e];
    if (edge.target == target && (best == nullptr || edge.length < best->length)) best = &edge;
  }
  return best;
}

void Roadmap::rollback(const Checkpoint& cp) {
  if (cp.vertices > vertices_.size() || cp.edges > edges_.size()) throw std::invalid_argument("stale checkpoint");
  while (edges_.size() > cp.edges) {
    adjacency_[edges_.back().source].pop_back();
    edges_.pop_back();
  }
  vertices_.resize(cp.vertices, Vertex{vertices_.front().q});
  adjacency_.resize(cp.vertices);
}

LiftedPath lift_path(const Roadmap& roadmap, std::span<const std::size_t> vertex_path, const MetricWeights& w) {
  if (vertex_path.empty()) throw std::invalid_argument("empty vertex path");
  const SymmetryGroup& group = roadmap.group();
  LiftedPath out;
  out.waypoints.push_back(roadmap.vertex(vertex_path[0]).q);
  // offset maps the stored representative of the current vertex onto the
  // current waypoint.
  std::size_t offset = 0;
  for (std::size_t i = 1; i < vertex_path.size(); ++i) {
    const Roadmap::Edge* e = roadmap.find_edge(vertex_path[i - 1], vertex_path[i]);
    if (e == nullptr) throw std::invalid_argument("consecutive path vertices are not joined by an edge");
    out.waypoints.push_back(act(group, offset, e->endpoint));
    offset = group.compose(offset, e->element);
    out.total_length += dist_config(out.waypoints[i - 1], out.waypoints[i], w);
  }
  return out;
}

Config canonicalize(const Config& q, const SymmetryGroup& group) {
  constexpr double kTol = 1e-9;
  Config out = q;
  for (const auto& f : group.factors()) {
    if (f.object >= q.size()) throw std::out_of_range("group acts on an object the config does not have");
    const Rotation& r = q[f.object].rotation;
    Rotation best = r;
    Eigen::Vector4d best_key = rotation_key(r);
    for (std::size_t k = 1; k < f.order(); ++k) {
      const Rotation candidate = compose(r, f.inverses[k]);
      const Eigen::Vector4d key = rotation_key(candidate);
      if (key_less(key, best_key, kTol)) {
        best = candidate;
        best_key = key;
      }
    }
    out.set_rotation(f.object, best);
  }
  return out;
}

}  // namespace symplan
