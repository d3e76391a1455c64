#include "imlabel/metric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace imlabel {

namespace {

void check_symmetric(const Eigen::MatrixXd& x, const char* who) {
  if (x.rows() != x.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

}  // namespace

double dist_euclidean(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dist_euclidean: dimension mismatch");
  return (x - y).norm();
}

double dist_spd(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  check_symmetric(x, "dist_spd");
  check_symmetric(y, "dist_spd");
  if (x.rows() != y.rows())
    throw std::invalid_argument("dist_spd: size mismatch");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(x);
  if (ex.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error("dist_spd: first argument is not positive definite");
  const Eigen::MatrixXd inv_sqrt =
      ex.eigenvectors() *
      ex.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      ex.eigenvectors().transpose();

  Eigen::MatrixXd m = inv_sqrt * y * inv_sqrt;
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em(m);
  if (em.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error("dist_spd: second argument is not positive definite");
  return em.eigenvalues().array().log().matrix().norm();
}

double dist_rotation(const Quaternion& a, const Quaternion& b) {
  // clamp absorbs rounding outside arccos' domain
  return std::acos(std::clamp(std::abs(dot(a, b)), 0.0, 1.0));
}

double dist_rotation_quotient(const RotationPoint& x, const RotationPoint& y,
                              const SymmetryGroup& group) {
  if (x.phase != y.phase)
    throw std::invalid_argument(
        "dist_rotation_quotient: phase mismatch, use dist_multiphase");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : group.elements())
    best = std::min(best, dist_rotation(x.q * s, y.q));
  return best;
}

double dist_multiphase(const RotationPoint& x, const RotationPoint& y,
                       const std::vector<SymmetryGroup>& groups, double tau_phase) {
  const int np = static_cast<int>(groups.size());
  if (x.phase < 0 || x.phase >= np || y.phase < 0 || y.phase >= np)
    throw std::invalid_argument("dist_multiphase: phase index out of range");
  if (tau_phase < 0.0)
    throw std::invalid_argument("dist_multiphase: tau_phase must be nonnegative");
  if (x.phase != y.phase) return tau_phase;
  return dist_rotation_quotient(x, y, groups[static_cast<size_t>(x.phase)]);
}

double dist_product(const Point& x, const Point& y,
                    const std::vector<MetricSpace>& components) {
  if (!x.is_composite() || !y.is_composite())
    throw std::invalid_argument("dist_product: expected composite points");
  const auto& xs = x.as_composite();
  const auto& ys = y.as_composite();
  if (xs.size() != components.size() || ys.size() != components.size())
    throw std::invalid_argument("dist_product: component structure mismatch");
  double sq = 0.0;
  for (size_t c = 0; c < components.size(); ++c) {
    const double d = components[c].distance(xs[c], ys[c]);
    sq += d * d;
  }
  return std::sqrt(sq);
}

MetricSpace MetricSpace::euclidean(int dim) {
  if (dim < 1) throw std::invalid_argument("euclidean dimension must be positive");
  return MetricSpace(Kind(Euclidean{dim}));
}

MetricSpace MetricSpace::spd(int size) {
  if (size < 1) throw std::invalid_argument("spd size must be positive");
  return MetricSpace(Kind(Spd{size}));
}

MetricSpace MetricSpace::rotation_quotient(SymmetryGroup group) {
  return MetricSpace(Kind(Quotient{std::move(group)}));
}

MetricSpace MetricSpace::multiphase_rotation(std::vector<SymmetryGroup> groups,
                                             double tau_phase) {
  if (groups.empty())
    throw std::invalid_argument("multiphase metric needs at least one group");
  return MetricSpace(Kind(Multiphase{std::move(groups), tau_phase}));
}

MetricSpace MetricSpace::product(std::vector<MetricSpace> components) {
  if (components.empty())
    throw std::invalid_argument("product metric needs at least one component");
  return MetricSpace(Kind(Product{std::move(components)}));
}

double MetricSpace::distance(const Point& x, const Point& y) const {
  struct Visitor {
    const Point& x;
    const Point& y;

    double operator()(const Euclidean& m) const {
      if (!x.is_vector() || !y.is_vector())
        throw std::invalid_argument("euclidean metric expects vector points");
      if (x.as_vector().size() != m.dim || y.as_vector().size() != m.dim)
        throw std::invalid_argument("euclidean metric: dimension mismatch");
      return dist_euclidean(x.as_vector(), y.as_vector());
    }
    double operator()(const Spd& m) const {
      if (!x.is_spd() || !y.is_spd())
        throw std::invalid_argument("spd metric expects matrix points");
      if (x.as_spd().rows() != m.size || y.as_spd().rows() != m.size)
        throw std::invalid_argument("spd metric: size mismatch");
      return dist_spd(x.as_spd(), y.as_spd());
    }
    double operator()(const Quotient& m) const {
      if (!x.is_rotation() || !y.is_rotation())
        throw std::invalid_argument("rotation metric expects quaternion points");
      return dist_rotation_quotient(x.as_rotation(), y.as_rotation(), m.group);
    }
    double operator()(const Multiphase& m) const {
      if (!x.is_rotation() || !y.is_rotation())
        throw std::invalid_argument("multiphase metric expects quaternion points");
      return dist_multiphase(x.as_rotation(), y.as_rotation(), m.groups, m.tau_phase);
    }
    double operator()(const Product& m) const {
      return dist_product(x, y, m.components);
    }
  };
  return std::visit(Visitor{x, y}, *kind_);
}

std::string MetricSpace::describe() const {
  struct Visitor {
    std::string operator()(const Euclidean& m) const {
      return "euclidean(" + std::to_string(m.dim) + ")";
    }
    std::string operator()(const Spd& m) const {
      return "spd(" + std::to_string(m.size) + ")";
    }
    std::string operator()(const Quotient& m) const {
      return "so3-quotient(|S|=" + std::to_string(m.group.size()) + ")";
    }
    std::string operator()(const Multiphase& m) const {
      return "multiphase(" + std::to_string(m.groups.size()) +
             " phases, tau=" + std::to_string(m.tau_phase) + ")";
    }
    std::string operator()(const Product& m) const {
      std::ostringstream os;
      os << "product(";
      for (size_t c = 0; c < m.components.size(); ++c)
        os << (c ? ", " : "") << m.components[c].describe();
      os << ")";
      return os.str();
    }
  };
  return std::visit(Visitor{}, *kind_);
}

}  // namespace imlabel
