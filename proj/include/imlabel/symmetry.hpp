#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "imlabel/quaternion.hpp"

namespace imlabel {

// Finite rotation symmetry group given as a list of unit quaternions.
// Contains the identity and is closed under composition up to sign
// (quaternions double-cover SO(3)).
class SymmetryGroup {
 public:
  SymmetryGroup() : elements_{Quaternion{}} {}
  explicit SymmetryGroup(std::vector<Quaternion> elements);

  static SymmetryGroup trivial() { return SymmetryGroup{}; }
  // Rotations about the z axis by multiples of 2*pi/order.
  static SymmetryGroup cyclic(int order);
  // Cyclic group about z plus `order` two-fold axes perpendicular to z
  // (2*order elements); dihedral(6) is the hexagonal-type desk-test group.
  static SymmetryGroup dihedral(int order);
  // Names: trivial, c2, c3, c4, c6, d2, d3, d4, d6.
  static SymmetryGroup named(const std::string& name);
  // One quaternion per line, "w x y z"; '#' comments and blank lines are
  // skipped. Unit norm enforced to 1e-8.
  static SymmetryGroup load(const std::string& path);
  static SymmetryGroup parse(std::istream& in);

  const std::vector<Quaternion>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }

  bool contains_identity(double tol = 1e-8) const;
  bool closed_up_to_sign(double tol = 1e-8) const;

 private:
  std::vector<Quaternion> elements_;
};

}  // namespace imlabel
