#pragma once

#include <Eigen/Core>
#include <memory>
#include <variant>
#include <vector>

#include "imlabel/quaternion.hpp"
#include "imlabel/symmetry.hpp"

namespace imlabel {

// Crystal orientation: unit quaternion plus a phase index (0 for
// single-phase data).
struct RotationPoint {
  Quaternion q;
  int phase = 0;
};

// A point in one of the supported metric spaces. Composite points pair up
// with product spaces componentwise.
class Point {
 public:
  Point() : value_(Eigen::VectorXd()) {}

  static Point vector(Eigen::VectorXd v) { return Point(std::move(v)); }
  static Point spd(Eigen::MatrixXd m) { return Point(std::move(m)); }
  static Point rotation(const Quaternion& q, int phase = 0) {
    return Point(RotationPoint{q, phase});
  }
  static Point composite(std::vector<Point> parts) {
    return Point(std::move(parts));
  }

  bool is_vector() const { return std::holds_alternative<Eigen::VectorXd>(value_); }
  bool is_spd() const { return std::holds_alternative<Eigen::MatrixXd>(value_); }
  bool is_rotation() const { return std::holds_alternative<RotationPoint>(value_); }
  bool is_composite() const { return std::holds_alternative<std::vector<Point>>(value_); }

  const Eigen::VectorXd& as_vector() const { return std::get<Eigen::VectorXd>(value_); }
  const Eigen::MatrixXd& as_spd() const { return std::get<Eigen::MatrixXd>(value_); }
  const RotationPoint& as_rotation() const { return std::get<RotationPoint>(value_); }
  const std::vector<Point>& as_composite() const { return std::get<std::vector<Point>>(value_); }

 private:
  template <typename T>
  explicit Point(T&& v) : value_(std::forward<T>(v)) {}

  std::variant<Eigen::VectorXd, Eigen::MatrixXd, RotationPoint, std::vector<Point>> value_;
};

// ||x - y||_2 on R^d.
double dist_euclidean(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Affine-invariant distance ||Log(x^(-1/2) y x^(-1/2))||_F on SPD matrices,
// computed via symmetric eigendecompositions. Throws std::domain_error on
// non-SPD input.
double dist_spd(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

// Geodesic distance arccos|<q1,q2>| on SO(3) as quaternions.
double dist_rotation(const Quaternion& a, const Quaternion& b);

// Quotient distance min_{s in S} arccos|<x.q s, y.q>|. The two-sided minimum
// over S x S coincides because right multiplication by a unit quaternion is
// an isometry of R^4.
double dist_rotation_quotient(const RotationPoint& x, const RotationPoint& y,
                              const SymmetryGroup& group);

// Multiphase EBSD distance: quotient distance within a phase, the constant
// tau_phase across phases.
double dist_multiphase(const RotationPoint& x, const RotationPoint& y,
                       const std::vector<SymmetryGroup>& groups, double tau_phase);

class MetricSpace;

// sqrt(sum of squared per-component distances).
double dist_product(const Point& x, const Point& y,
                    const std::vector<MetricSpace>& components);

class MetricSpace {
 public:
  MetricSpace() : MetricSpace(euclidean(1)) {}

  static MetricSpace euclidean(int dim);
  static MetricSpace spd(int size);
  static MetricSpace rotation_quotient(SymmetryGroup group);
  static MetricSpace multiphase_rotation(std::vector<SymmetryGroup> groups,
                                         double tau_phase = 1.0);
  static MetricSpace product(std::vector<MetricSpace> components);

  // Symmetric, nonnegative, zero on identical points; pure and safe for
  // concurrent use.
  double distance(const Point& x, const Point& y) const;

  std::string describe() const;

 private:
  struct Euclidean { int dim; };
  struct Spd { int size; };
  struct Quotient { SymmetryGroup group; };
  struct Multiphase { std::vector<SymmetryGroup> groups; double tau_phase; };
  struct Product { std::vector<MetricSpace> components; };
  using Kind = std::variant<Euclidean, Spd, Quotient, Multiphase, Product>;

  explicit MetricSpace(Kind kind) : kind_(std::make_shared<Kind>(std::move(kind))) {}

  std::shared_ptr<const Kind> kind_;
};

}  // namespace imlabel
