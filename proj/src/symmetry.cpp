#include "imlabel/symmetry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace imlabel {

namespace {

bool near_identity(const Quaternion& q, double tol) {
  return std::abs(std::abs(q.w) - 1.0) <= tol &&
         std::abs(q.x) <= tol && std::abs(q.y) <= tol && std::abs(q.z) <= tol;
}

double dist_up_to_sign(const Quaternion& a, const Quaternion& b) {
  const double dp = std::hypot(std::hypot(a.w - b.w, a.x - b.x),
                               std::hypot(a.y - b.y, a.z - b.z));
  const double dm = std::hypot(std::hypot(a.w + b.w, a.x + b.x),
                               std::hypot(a.y + b.y, a.z + b.z));
  return std::min(dp, dm);
}

}  // namespace

SymmetryGroup::SymmetryGroup(std::vector<Quaternion> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty())
    throw std::invalid_argument("symmetry group must not be empty");
  for (auto& q : elements_) {
    if (std::abs(q.norm() - 1.0) > 1e-8)
      throw std::invalid_argument("symmetry group element is not a unit quaternion");
    q = q.normalized();
  }
  if (!contains_identity())
    throw std::invalid_argument("symmetry group does not contain the identity");
}

SymmetryGroup SymmetryGroup::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<Quaternion> q;
  q.reserve(static_cast<size_t>(order));
  for (int k = 0; k < order; ++k)
    q.push_back(axis_angle(0, 0, 1, 2.0 * std::numbers::pi * k / order));
  return SymmetryGroup(std::move(q));
}

SymmetryGroup SymmetryGroup::dihedral(int order) {
  if (order < 1) throw std::invalid_argument("dihedral group order must be >= 1");
  std::vector<Quaternion> q;
  q.reserve(static_cast<size_t>(2 * order));
  for (int k = 0; k < order; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / order;
    q.push_back(axis_angle(0, 0, 1, angle));
    // two-fold axis in the xy plane at half the step angle
    q.push_back(axis_angle(std::cos(angle / 2.0), std::sin(angle / 2.0), 0,
                           std::numbers::pi));
  }
  return SymmetryGroup(std::move(q));
}

SymmetryGroup SymmetryGroup::named(const std::string& name) {
  if (name == "trivial" || name.empty()) return trivial();
  if (name.size() == 2 && (name[0] == 'c' || name[0] == 'd') &&
      name[1] >= '1' && name[1] <= '9') {
    const int order = name[1] - '0';
    return name[0] == 'c' ? cyclic(order) : dihedral(order);
  }
  throw std::invalid_argument("unknown symmetry group name: " + name);
}

SymmetryGroup SymmetryGroup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open symmetry group file: " + path);
  return parse(in);
}

SymmetryGroup SymmetryGroup::parse(std::istream& in) {
  std::vector<Quaternion> q;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Quaternion e;
    if (!(ls >> e.w)) continue;  // blank line
    if (!(ls >> e.x >> e.y >> e.z))
      throw std::runtime_error("symmetry group line " + std::to_string(lineno) +
                               ": expected four reals");
    q.push_back(e);
  }
  return SymmetryGroup(std::move(q));
}

bool SymmetryGroup::contains_identity(double tol) const {
  for (const auto& q : elements_)
    if (near_identity(q, tol)) return true;
  return false;
}

bool SymmetryGroup::closed_up_to_sign(double tol) const {
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      const Quaternion ab = a * b;
      bool found = false;
      for (const auto& c : elements_) {
        if (dist_up_to_sign(ab, c) <= tol) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace imlabel
