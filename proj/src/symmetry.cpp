#include "symplan/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symplan {

namespace {

constexpr std::size_t kMaxSaturatedOrder = 240;
constexpr std::size_t kMaxProductOrder = 1u << 16;

int find_rotation(const std::vector<Rotation>& elements, const Rotation& r, double tol) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (dist_rotation(elements[i], r) <= tol) return static_cast<int>(i);
  }
  return -1;
}

// Completes a generator set to the group it generates by right-multiplying
// every known element by every generator until nothing new appears.
std::vector<Rotation> saturate(const std::vector<Rotation3>& generators, double tol = 1e-9) {
  std::vector<Rotation> elements{Rotation3{}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      const Rotation candidate = std::get<Rotation3>(elements[i]) * g;
      if (find_rotation(elements, candidate, tol) < 0) {
        elements.push_back(candidate);
        if (elements.size() > kMaxSaturatedOrder) {
          throw std::logic_error("generator set does not close to a small finite group");
        }
      }
    }
  }
  return elements;
}

Eigen::Vector3d unit_axis(const Eigen::Vector3d& axis) {
  const double n = axis.norm();
  if (!(n > 1e-12)) throw std::invalid_argument("axis must be nonzero");
  return axis / n;
}

}  // namespace

SymmetryGroup::SymmetryGroup(int dim, GroupDescriptor descriptor, std::vector<Factor> factors)
    : dim_(dim), descriptor_(std::move(descriptor)), factors_(std::move(factors)) {
  std::size_t max_object = 0;
  for (const auto& f : factors_) {
    strides_.push_back(order_);
    order_ *= f.order();
    if (order_ > kMaxProductOrder) throw std::invalid_argument("group order too large to enumerate");
    max_object = std::max(max_object, f.object);
  }
  object_factor_.assign(max_object + 1, -1);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    object_factor_[factors_[i].object] = static_cast<int>(i);
  }
}

SymmetryGroup SymmetryGroup::from_rotations(GroupDescriptor descriptor, std::vector<Rotation> rotations,
                                            std::size_t object, double tol) {
  if (rotations.empty()) throw std::invalid_argument("group needs at least one element");
  const int dim = rotation_dim(rotations.front());
  for (const auto& r : rotations) {
    if (rotation_dim(r) != dim) throw std::invalid_argument("mixed rotation dimensions");
  }
  Factor f;
  f.object = object;
  f.elements = std::move(rotations);
  const std::size_t n = f.elements.size();
  for (const auto& r : f.elements) f.inverses.push_back(symplan::inverse(r));
  f.cayley.assign(n * n, -1);
  f.inverse.assign(n, -1);
  const Rotation id = identity_rotation(dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      f.cayley[a * n + b] = find_rotation(f.elements, symplan::compose(f.elements[a], f.elements[b]), tol);
      if (f.inverse[a] < 0 && dist_rotation(symplan::compose(f.elements[a], f.elements[b]), id) <= tol) {
        f.inverse[a] = static_cast<int>(b);
      }
    }
  }
  std::vector<Factor> factors;
  factors.push_back(std::move(f));
  return SymmetryGroup(dim, std::move(descriptor), std::move(factors));
}

const SymmetryGroup::Factor* SymmetryGroup::factor_for_object(std::size_t object) const {
  if (object >= object_factor_.size() || object_factor_[object] < 0) return nullptr;
  return &factors_[static_cast<std::size_t>(object_factor_[object])];
}

std::vector<std::size_t> SymmetryGroup::decode(std::size_t index) const {
  if (index >= order_) throw std::out_of_range("group element index out of range");
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = (index / strides_[i]) % factors_[i].order();
  }
  return out;
}

std::size_t SymmetryGroup::encode(std::span<const std::size_t> factor_indices) const {
  if (factor_indices.size() != factors_.size()) throw std::invalid_argument("wrong number of factor indices");
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factor_indices[i] >= factors_[i].order()) throw std::out_of_range("factor index out of range");
    index += factor_indices[i] * strides_[i];
  }
  return index;
}

GroupElement SymmetryGroup::element(std::size_t index) const {
  GroupElement g;
  g.index = index;
  const auto idx = decode(index);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    g.parts.push_back({factors_[i].object, factors_[i].elements[idx[i]]});
  }
  return g;
}

std::size_t SymmetryGroup::compose(std::size_t a, std::size_t b) const {
  const auto ia = decode(a);
  const auto ib = decode(b);
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int c = factors_[i].compose(ia[i], ib[i]);
    if (c < 0) throw std::logic_error("group is not closed under composition");
    out[i] = static_cast<std::size_t>(c);
  }
  return encode(out);
}

std::size_t SymmetryGroup::inverse(std::size_t a) const {
  const auto ia = decode(a);
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int c = factors_[i].inverse[ia[i]];
    if (c < 0) throw std::logic_error("group element has no inverse");
    out[i] = static_cast<std::size_t>(c);
  }
  return encode(out);
}

SymmetryGroup make_trivial(int dim) {
  if (dim == 2) return make_cyclic_2d(1);
  return make_cyclic_3d(1, Eigen::Vector3d::UnitZ());
}

SymmetryGroup make_cyclic_2d(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  std::vector<Rotation> rotations;
  for (int k = 0; k < n; ++k) rotations.emplace_back(Rotation2(kTwoPi * k / n));
  GroupDescriptor d;
  d.kind = "cyclic2d";
  d.n = n;
  return SymmetryGroup::from_rotations(std::move(d), std::move(rotations));
}

SymmetryGroup make_cyclic_3d(int n, const Eigen::Vector3d& axis) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  const Eigen::Vector3d a = unit_axis(axis);
  std::vector<Rotation> rotations;
  for (int k = 0; k < n; ++k) rotations.emplace_back(Rotation3::from_axis_angle(a, kTwoPi * k / n));
  GroupDescriptor d;
  d.kind = "cyclic3d";
  d.n = n;
  d.axis = a;
  return SymmetryGroup::from_rotations(std::move(d), std::move(rotations));
}

SymmetryGroup make_dihedral_3d(int n, const Eigen::Vector3d& axis, const Eigen::Vector3d& perp) {
  if (n < 1) throw std::invalid_argument("dihedral group needs n >= 1");
  const Eigen::Vector3d a = unit_axis(axis);
  const Eigen::Vector3d p = unit_axis(perp);
  if (std::abs(a.dot(p)) > 1e-9) throw std::invalid_argument("dihedral axes must be perpendicular");
  std::vector<Rotation> rotations;
  for (int k = 0; k < n; ++k) rotations.emplace_back(Rotation3::from_axis_angle(a, kTwoPi * k / n));
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector3d flip_axis = Eigen::AngleAxisd(kPi * k / n, a) * p;
    rotations.emplace_back(Rotation3::from_axis_angle(flip_axis, kPi));
  }
  GroupDescriptor d;
  d.kind = "dihedral";
  d.n = n;
  d.axis = a;
  d.perp = p;
  return SymmetryGroup::from_rotations(std::move(d), std::move(rotations));
}

SymmetryGroup make_tetrahedral() {
  GroupDescriptor d;
  d.kind = "tetrahedral";
  return SymmetryGroup::from_rotations(
      std::move(d), saturate({Rotation3::from_axis_angle({1, 1, 1}, kTwoPi / 3),
                              Rotation3::from_axis_angle({0, 0, 1}, kPi)}));
}

SymmetryGroup make_octahedral() {
  GroupDescriptor d;
  d.kind = "octahedral";
  return SymmetryGroup::from_rotations(
      std::move(d), saturate({Rotation3::from_axis_angle({0, 0, 1}, kPi / 2),
                              Rotation3::from_axis_angle({1, 1, 1}, kTwoPi / 3)}));
}

SymmetryGroup make_icosahedral() {
  // 5-fold axis through the icosahedron vertex (0, 1, φ); 3-fold axis through
  // the face centre (1, 1, 1).
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  GroupDescriptor d;
  d.kind = "icosahedral";
  return SymmetryGroup::from_rotations(
      std::move(d), saturate({Rotation3::from_axis_angle({0, 1, phi}, kTwoPi / 5),
                              Rotation3::from_axis_angle({1, 1, 1}, kTwoPi / 3)}));
}

SymmetryGroup product(std::span<const std::pair<SymmetryGroup, std::size_t>> groups) {
  if (groups.empty()) throw std::invalid_argument("product of no groups");
  const int dim = groups.front().first.dim();
  std::vector<SymmetryGroup::Factor> factors;
  GroupDescriptor d;
  d.kind = "product";
  for (const auto& [g, object] : groups) {
    if (g.factors().size() != 1) throw std::invalid_argument("product inputs must be single-object groups");
    if (g.dim() != dim) throw std::invalid_argument("product inputs must share a dimension");
    for (const auto& f : factors) {
      if (f.object == object) throw std::invalid_argument("duplicate object index in product");
    }
    SymmetryGroup::Factor f = g.factors().front();
    f.object = object;
    factors.push_back(std::move(f));
    d.factors.emplace_back(g.descriptor(), object);
  }
  return SymmetryGroup(dim, std::move(d), std::move(factors));
}

std::size_t declared_order(const GroupDescriptor& descriptor) {
  const auto& k = descriptor.kind;
  if (k == "cyclic2d" || k == "cyclic3d") return static_cast<std::size_t>(descriptor.n);
  if (k == "dihedral") return 2 * static_cast<std::size_t>(descriptor.n);
  if (k == "tetrahedral") return 12;
  if (k == "octahedral") return 24;
  if (k == "icosahedral") return 60;
  if (k == "product") {
    std::size_t o = 1;
    for (const auto& [f, object] : descriptor.factors) o *= declared_order(f);
    return o;
  }
  return 0;
}

SymmetryGroup make_group(const GroupDescriptor& descriptor) {
  const auto& k = descriptor.kind;
  if (k == "cyclic2d") return make_cyclic_2d(descriptor.n);
  if (k == "cyclic3d") return make_cyclic_3d(descriptor.n, descriptor.axis);
  if (k == "dihedral") return make_dihedral_3d(descriptor.n, descriptor.axis, descriptor.perp);
  if (k == "tetrahedral") return make_tetrahedral();
  if (k == "octahedral") return make_octahedral();
  if (k == "icosahedral") return make_icosahedral();
  if (k == "product") {
    std::vector<std::pair<SymmetryGroup, std::size_t>> parts;
    for (const auto& [f, object] : descriptor.factors) parts.emplace_back(make_group(f), object);
    return product(parts);
  }
  throw std::invalid_argument("unknown group kind: " + k);
}

GroupAxiomReport verify_group_axioms(const SymmetryGroup& group, double tol) {
  GroupAxiomReport report;
  for (const auto& f : group.factors()) {
    const std::size_t n = f.order();
    const Rotation id = identity_rotation(group.dim());
    const double id_dev = dist_rotation(f.elements[0], id);
    report.max_deviation = std::max(report.max_deviation, id_dev);
    if (id_dev > tol) report.identity = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (f.compose(0, a) != static_cast<int>(a) || f.compose(a, 0) != static_cast<int>(a)) {
        report.identity = false;
      }
      for (std::size_t b = a + 1; b < n; ++b) {
        if (dist_rotation(f.elements[a], f.elements[b]) <= tol) report.distinct = false;
      }
      const int inv = f.inverse[a];
      if (inv < 0) {
        report.inverses = false;
      } else {
        const double dev = dist_rotation(compose(f.elements[a], f.elements[static_cast<std::size_t>(inv)]), id);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tol) report.inverses = false;
      }
      for (std::size_t b = 0; b < n; ++b) {
        const int c = f.compose(a, b);
        if (c < 0) {
          report.closure = false;
          continue;
        }
        const double dev =
            dist_rotation(compose(f.elements[a], f.elements[b]), f.elements[static_cast<std::size_t>(c)]);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tol) report.closure = false;
      }
    }
    if (!report.closure) {
      report.associativity = false;
      continue;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab = static_cast<std::size_t>(f.compose(a, b));
        for (std::size_t c = 0; c < n; ++c) {
          const auto bc = static_cast<std::size_t>(f.compose(b, c));
          if (f.compose(ab, c) != f.compose(a, bc)) report.associativity = false;
        }
      }
    }
  }
  const std::size_t expected = declared_order(group.descriptor());
  if (expected != 0 && expected != group.order()) report.declared_order = false;
  return report;
}

Config act(const SymmetryGroup& group, std::size_t element, const Config& q) {
  if (group.dim() != q.dim()) throw std::invalid_argument("group and config dimensions differ");
  const auto idx = group.decode(element);
  Config out = q;
  const auto factors = group.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.object >= q.size()) throw std::out_of_range("group acts on an object the config does not have");
    if (idx[i] == 0) continue;
    out.set_rotation(f.object, compose(q[f.object].rotation, f.inverses[idx[i]]));
  }
  return out;
}

Config act(const GroupElement& g, const Config& q) {
  Config out = q;
  for (const auto& part : g.parts) {
    if (part.object >= q.size()) throw std::out_of_range("group acts on an object the config does not have");
    out.set_rotation(part.object, compose(q[part.object].rotation, symplan::inverse(part.rotation)));
  }
  return out;
}

std::vector<Config> orbit(const SymmetryGroup& group, const Config& q) {
  std::vector<Config> out;
  out.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) out.push_back(act(group, g, q));
  return out;
}

}  // namespace symplan
