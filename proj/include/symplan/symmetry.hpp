#pragma once

// Finite rotation groups (cyclic, dihedral, polyhedral and their products)
// and their action on configurations.

#include "symplan/geometry.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symplan {

/// Parameters a group was built from; enough to rebuild it.
struct GroupDescriptor {
  std::string kind;  // cyclic2d, cyclic3d, dihedral, tetrahedral, octahedral, icosahedral, product, custom
  int n = 0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d perp = Eigen::Vector3d::UnitX();
  std::vector<std::pair<GroupDescriptor, std::size_t>> factors;  // product only
};

struct ObjectRotation {
  std::size_t object = 0;
  Rotation rotation;
};

struct GroupElement {
  std::size_t index = 0;
  std::vector<ObjectRotation> parts;
};

/// A finite group of body-frame rotations, stored as a product of factors that
/// each act on one object. Single-object groups have exactly one factor.
class SymmetryGroup {
 public:
  struct Factor {
    std::size_t object = 0;
    std::vector<Rotation> elements;  // identity first
    std::vector<Rotation> inverses;  // rotation inverse of each element
    std::vector<int> cayley;         // row-major order×order, -1 when a product is missing
    std::vector<int> inverse;        // -1 when missing

    std::size_t order() const { return elements.size(); }
    int compose(std::size_t a, std::size_t b) const { return cayley[a * order() + b]; }
  };

  /// Builds a single-factor group from an explicit element list, filling the
  /// Cayley table by search. Missing products are recorded, not rejected, so
  /// verify_group_axioms can report them.
  static SymmetryGroup from_rotations(GroupDescriptor descriptor, std::vector<Rotation> rotations,
                                      std::size_t object = 0, double tol = 1e-9);

  int dim() const { return dim_; }
  std::size_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const GroupDescriptor& descriptor() const { return descriptor_; }
  std::span<const Factor> factors() const { return factors_; }

  /// Factor acting on the given object, if any.
  const Factor* factor_for_object(std::size_t object) const;

  std::vector<std::size_t> decode(std::size_t index) const;
  std::size_t encode(std::span<const std::size_t> factor_indices) const;

  GroupElement element(std::size_t index) const;
  std::size_t compose(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

 private:
  friend SymmetryGroup product(std::span<const std::pair<SymmetryGroup, std::size_t>> groups);
  SymmetryGroup(int dim, GroupDescriptor descriptor, std::vector<Factor> factors);

  int dim_ = 2;
  GroupDescriptor descriptor_;
  std::vector<Factor> factors_;
  std::vector<std::size_t> strides_;
  std::vector<int> object_factor_;
  std::size_t order_ = 1;
};

using GroupPtr = std::shared_ptr<const SymmetryGroup>;

SymmetryGroup make_trivial(int dim);
SymmetryGroup make_cyclic_2d(int n);
SymmetryGroup make_cyclic_3d(int n, const Eigen::Vector3d& axis);
SymmetryGroup make_dihedral_3d(int n, const Eigen::Vector3d& axis, const Eigen::Vector3d& perp);
SymmetryGroup make_tetrahedral();
SymmetryGroup make_octahedral();
SymmetryGroup make_icosahedral();

/// Direct product; each input must be a single-factor group and is placed on
/// the given (distinct) object index.
SymmetryGroup product(std::span<const std::pair<SymmetryGroup, std::size_t>> groups);

/// Order implied by a descriptor (n, 2n, 12, 24, 60, or the product).
std::size_t declared_order(const GroupDescriptor& descriptor);

SymmetryGroup make_group(const GroupDescriptor& descriptor);

struct GroupAxiomReport {
  bool closure = true;
  bool identity = true;
  bool inverses = true;
  bool associativity = true;
  bool distinct = true;  // no duplicated elements
  bool declared_order = true;
  double max_deviation = 0.0;

  bool ok() const { return closure && identity && inverses && associativity && distinct && declared_order; }
};

GroupAxiomReport verify_group_axioms(const SymmetryGroup& group, double tol = 1e-9);

/// Body-frame action: each factor's object orientation R becomes R·g⁻¹.
/// Using the inverse makes this a left action, act(g, act(h, q)) = act(gh, q).
Config act(const SymmetryGroup& group, std::size_t element, const Config& q);
Config act(const GroupElement& g, const Config& q);

std::vector<Config> orbit(const SymmetryGroup& group, const Config& q);

}  // namespace symplan
