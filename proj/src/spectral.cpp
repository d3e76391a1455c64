#include "imlabel/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace imlabel {

EigenStructure eigendecompose(const Eigen::MatrixXd& p) {
  if (p.rows() != p.cols())
    throw std::invalid_argument("eigendecompose: matrix is not square");
  const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
  if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("eigendecompose: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p);
  const int n = static_cast<int>(p.rows());

  EigenStructure s;
  s.lambda.resize(n);
  s.q.resize(n, n);
  // solver returns ascending order; flip to descending
  for (int j = 0; j < n; ++j) {
    s.lambda[j] = solver.eigenvalues()[n - 1 - j];
    s.q.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  // canonical sign: largest-magnitude entry positive
  for (int j = 0; j < n; ++j) {
    int arg = 0;
    s.q.col(j).cwiseAbs().maxCoeff(&arg);
    if (s.q(arg, j) < 0.0) s.q.col(j) = -s.q.col(j);
  }
  for (int j = 0; j < n;) {
    EigenGroup group{s.lambda[j], j, 1};
    int k = j + 1;
    while (k < n && group.value - s.lambda[k] <= kEigenGroupTol) {
      ++group.count;
      ++k;
    }
    s.distinct.push_back(group);
    j = k;
  }
  s.positive_groups = 0;
  for (const auto& g : s.distinct)
    if (g.value > kEigenGroupTol) ++s.positive_groups;
  return s;
}

EigenStructure eigendecompose(const WeightGraph& p) {
  if (!p.symmetric())
    throw std::invalid_argument("eigendecompose: weight graph is not symmetric");
  return eigendecompose(p.dense());
}

bool is_connected(const WeightGraph& p) {
  const int n = p.size();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (const auto& [j, w] : p.row(i)) {
      if (w > 0.0 && !seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = 1;
        ++visited;
        stack.push_back(j);
      }
    }
  }
  return visited == n;
}

PowerLimitResult power_limit_check(const Eigen::MatrixXd& p, long long r, double tol) {
  const int n = static_cast<int>(p.rows());
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd base = p;
  long long e = r;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  const double deviation =
      (result.array() - 1.0 / static_cast<double>(n)).abs().maxCoeff();
  return {deviation, deviation <= tol};
}

PowerLimitResult power_limit_check(const WeightGraph& p, long long r, double tol) {
  return power_limit_check(p.dense(), r, tol);
}

}  // namespace imlabel
