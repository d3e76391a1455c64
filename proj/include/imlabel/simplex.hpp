#pragma once

#include <Eigen/Core>
#include <vector>

namespace imlabel {

// A point of the epsilon-probability-simplex: components sum to 1 and each
// component is >= epsilon (which requires epsilon < 1/K).
struct SimplexVector {
  Eigen::VectorXd values;
  double epsilon = 0.0;

  int dim() const { return static_cast<int>(values.size()); }
};

// KL(x,y) = sum_k x_k log(x_k / y_k) with 0 log 0 = 0. Requires y > 0 and
// x >= 0 componentwise.
double kl_divergence(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Closed-form KL projection of y > 0 onto the eps-simplex: sort ascending,
// pin the m smallest to eps and scale the rest by
// tau_m = (1 - m eps) / (||y||_1 - sum of pinned), where m is the smallest
// index with y_m tau_m <= eps < y_{m+1} tau_m. eps = 0 degenerates to
// y / ||y||_1. Requires 0 <= eps < 1/K.
SimplexVector project_kl_sorted(const Eigen::VectorXd& y, double eps);

// The while-loop form: normalize, then repeatedly pin every current argmin
// below eps and rescale the rest by tau. Produces the same vector as the
// sorted form.
SimplexVector project_kl_iterative(const Eigen::VectorXd& y, double eps);

// Componentwise prod_j x_j^(gamma_j) for strictly positive points and convex
// weights, evaluated in the log domain. This is the weighted Riemannian
// center of mass on the positive reals with the log metric.
Eigen::VectorXd weighted_geometric_mean(const std::vector<Eigen::VectorXd>& points,
                                        const Eigen::VectorXd& gamma);

// Alternative to the KL projection: v + (eps - min_k v_k) on every
// component (unconditionally), then renormalize. Post-normalization
// components are >= eps/(1 + K eps), which is the epsilon recorded in the
// result.
SimplexVector additive_shift_renormalize(const Eigen::VectorXd& v, double eps);

// -(1/n) sum_{i,k} W_ik log W_ik with 0 log 0 = 0.
double average_entropy(const Eigen::MatrixXd& w);

}  // namespace imlabel
