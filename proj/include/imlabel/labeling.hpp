#pragma once

#include <Eigen/Core>
#include <vector>

#include "imlabel/image.hpp"
#include "imlabel/simplex.hpp"
#include "imlabel/weight_graph.hpp"

namespace imlabel {

// d_ik = dist(f_i, prior_k) for valid pixels; rows of missing pixels are
// identically zero so they exert no pull and get filled by their neighbors.
// Metric errors are rethrown with the offending pixel index attached.
Eigen::MatrixXd build_distance_matrix(const FeatureImage& image,
                                      const PriorSet& priors,
                                      const MetricSpace& space);

// A_i = exp(-sum_j alpha_ij D_j) / ||...||_1, computed in the log domain
// with per-row max subtraction. Serves as W^(0).
Eigen::MatrixXd init_assignment(const Eigen::MatrixXd& distances,
                                const WeightGraph& alpha);

// Step 1: U_i = W_i o prod_j (W_j)^(rho_ij), evaluated as
// exp(log W + P log W). Requires W > 0.
Eigen::MatrixXd step_multiplicative(const Eigen::MatrixXd& w, const WeightGraph& rho);

// First-step variant with the extra factor A_i.
Eigen::MatrixXd step_apss(const Eigen::MatrixXd& w, const WeightGraph& rho,
                          const Eigen::MatrixXd& a);

struct StoppingRule {
  double entropy_threshold = 1e-3;
  int max_iterations = 1000;
};

enum class UpdateVariant { standard, apss, additive };

struct LabelState {
  Eigen::MatrixXd w;  // n x K, rows in the eps-simplex
  double epsilon = 0.0;
  int iterations = 0;
  std::vector<double> entropy_trace;  // entropy after each iteration
};

struct IterateResult {
  LabelState state;
  bool converged = false;  // entropy dropped below the threshold
};

// The multiplicative filtering loop: repeat { step (variant) -> per-row KL
// projection (or additive shift) } until the average entropy drops below the
// threshold or max_iterations is reached. Synchronous: every row update
// reads only the previous iterate, so results are deterministic for any
// thread count. An unconverged run is not an error; the flag reports it.
IterateResult iterate(const Eigen::MatrixXd& a, const WeightGraph& rho, double eps,
                      const StoppingRule& stop = {},
                      UpdateVariant variant = UpdateVariant::standard,
                      int threads = 1);

struct LogIterateResult {
  Eigen::MatrixXd w;          // final log-domain iterate (I+P)^r log A
  std::vector<int> labels;    // per-row argmax at r_max, 1-based
  // Smallest r such that the per-row argmax is the same for all r' in
  // [r, r_max]; r_max + 1 when the argmax still changes at r_max.
  int settle_iteration = 0;
};

// Exact-in-floating-point surrogate for eps = 0: iterate w <- w + P w in the
// log domain (no exponentiation, hence no underflow) and read labels off the
// per-row argmax. Requires symmetric rho and strictly positive A.
LogIterateResult iterate_log_domain_eps0(const Eigen::MatrixXd& a,
                                         const WeightGraph& rho, int r_max);

// Per-row argmax, 1-based; ties broken by the smallest label index.
std::vector<int> assign_labels(const Eigen::MatrixXd& w);

// F(W) = <log W, P log W>. Requires W > 0 and symmetric rho.
double objective_value(const Eigen::MatrixXd& w, const WeightGraph& rho);

}  // namespace imlabel
