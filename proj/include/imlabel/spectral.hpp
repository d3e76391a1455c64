#pragma once

#include <Eigen/Core>
#include <vector>

#include "imlabel/weight_graph.hpp"

namespace imlabel {

struct EigenGroup {
  double value;  // representative eigenvalue (largest in the group)
  int start;     // first index in descending order
  int count;     // multiplicity
};

// Eigendecomposition P = Q diag(lambda) Q^T of a symmetric matrix, with
// eigenvalues descending and eigenvector signs canonicalized (largest-
// magnitude entry positive). Distinct eigenvalues are grouped with absolute
// tolerance 1e-9; positive_groups counts the groups with value > 1e-9.
struct EigenStructure {
  Eigen::MatrixXd q;       // columns are eigenvectors
  Eigen::VectorXd lambda;  // descending
  std::vector<EigenGroup> distinct;
  int positive_groups = 0;  // s-hat

  double mu(int j) const { return 1.0 + lambda[j]; }
  int size() const { return static_cast<int>(lambda.size()); }
};

constexpr double kEigenGroupTol = 1e-9;

EigenStructure eigendecompose(const Eigen::MatrixXd& p);
// Requires the symmetric flag; throws std::invalid_argument otherwise.
EigenStructure eigendecompose(const WeightGraph& p);

// True when the positive-weight graph of P is connected.
bool is_connected(const WeightGraph& p);

struct PowerLimitResult {
  double deviation = 0.0;  // max-norm distance of P^r from ones/n
  bool within_tol = false;
};

// Checks how far P^r is from the constant matrix ones/n (Lemma on stochastic
// matrices: converges when P has positive diagonal and simple eigenvalue 1).
PowerLimitResult power_limit_check(const WeightGraph& p, long long r, double tol);
PowerLimitResult power_limit_check(const Eigen::MatrixXd& p, long long r, double tol);

}  // namespace imlabel
