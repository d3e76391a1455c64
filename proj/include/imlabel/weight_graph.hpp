#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "imlabel/image.hpp"

namespace imlabel {

// Sparse row-stochastic neighborhood weights. Rows hold (neighbor, weight)
// pairs sorted by neighbor index; stored weights are strictly positive and
// each row sums to 1. The symmetric flag asserts rho_ij == rho_ji for all
// stored pairs (the local and Gaussian builders guarantee it exactly).
class WeightGraph {
 public:
  using Entry = std::pair<int, double>;

  WeightGraph() = default;
  WeightGraph(std::vector<std::vector<Entry>> rows, bool symmetric);

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<Entry>& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  bool symmetric() const { return symmetric_; }

  // 0 when j is not a stored neighbor of i.
  double weight(int i, int j) const;
  double row_sum(int i) const;
  bool has_positive_diagonal() const;
  double max_asymmetry() const;

  // out = P * X, parallelized over rows; deterministic for any thread count.
  void multiply(const Eigen::MatrixXd& x, Eigen::MatrixXd& out, int threads = 1) const;
  Eigen::MatrixXd dense() const;

 private:
  std::vector<std::vector<Entry>> rows_;
  bool symmetric_ = false;
};

// Uniform weights 1/s^2 on the s x s window with mirror boundary; mirrored
// duplicates fold onto the same index. Result is exactly symmetric.
WeightGraph build_local_uniform(const GridGeometry& geom, int s);

// Gaussian weights exp(-(dr^2+dc^2)/(2 sigma^2)) on the s x s window,
// truncated outside [-3 sigma, 3 sigma] per coordinate, mirror boundary,
// row-normalized. Exactly symmetric.
WeightGraph build_gaussian(const GridGeometry& geom, int s, double sigma);

struct NonlocalParams {
  int patch_half = 3;        // patch is (2*patch_half+1)^2
  int neighbor_count = 7;    // s_nl
  int window = 11;           // t, odd search-window side
  double sigma_patch = 1.0;  // patch Gaussian std
  double sigma_weight = 0.2; // weight Gaussian std

  void validate() const;
};

// Nonlocal weights: patch distance d_p over the t x t search window, keep
// the s_nl smallest (ties by (distance, linear index)), symmetrize the
// neighborhoods by union, weight exp(-d_p/(2 sigma_w^2)), normalize rows.
// Row normalization does not preserve symmetry; the flag is false.
WeightGraph build_nonlocal(const FeatureImage& image, const MetricSpace& space,
                           const NonlocalParams& params, int threads = 1);

// (rho + rho^T)/2 followed by one row renormalization; the renormalization
// breaks symmetry again by at most *asymmetry_after (reported to callers).
WeightGraph symmetrized(const WeightGraph& g, double* asymmetry_after = nullptr);

// Plain-text format: header "<n> rows", then one "i j weight" line per
// stored entry; weights >= 1e-16 retained.
void save_graph(std::ostream& out, const WeightGraph& g);
void save_graph(const std::string& path, const WeightGraph& g);
WeightGraph load_graph(std::istream& in);
WeightGraph load_graph(const std::string& path);

}  // namespace imlabel
