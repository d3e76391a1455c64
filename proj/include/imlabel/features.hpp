#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <vector>

#include "imlabel/image.hpp"

namespace imlabel {

// Grayscale image with intensities in [0,1], row-major.
struct GrayImage {
  GridGeometry geom;
  std::vector<double> pixels;

  double at(int r, int c) const {
    return pixels[static_cast<size_t>(geom.index(r, c))];
  }
};

struct TextureParams {
  double presmooth_sigma = 0.5;  // Gaussian pre-smoothing std, 0 disables
  int cov_window = 7;            // odd window side for the covariance

  // cov_window^2 - 1 >= 5 so a 5x5 covariance can be generically definite.
  void validate() const;
};

struct CovarianceFeature {
  Eigen::Matrix<double, 5, 1> mu;
  Eigen::Matrix<double, 5, 5> c;
};

// Per-pixel feature vectors (I, I_x, I_y, I_xx, I_yy): Gaussian pre-smooth
// (truncated at 3 sigma, mirror boundary), then central first and second
// differences with mirror boundary.
std::vector<Eigen::Matrix<double, 5, 1>> feature_vector_field(
    const GrayImage& image, const TextureParams& params);

// Windowed sample mean and covariance (1/(|N|-1) normalization, mirror
// boundary). Near-singular covariances get a diagonal floor
// delta = 1e-8 trace(C)/5 (1e-8 absolute when the trace vanishes).
std::vector<CovarianceFeature> covariance_descriptors(
    const std::vector<Eigen::Matrix<double, 5, 1>>& field,
    const GridGeometry& geom, const TextureParams& params);

// Composite point (mu, C) on R^5 x P(5) and its matching metric.
Point covariance_point(const CovarianceFeature& f);
MetricSpace covariance_metric();

// Baseline: Gaussian convolution per channel, then the closest prior per
// pixel (lowest-index tie-break). Only defined for vector features;
// manifold-valued inputs are rejected since linear averaging does not apply.
std::vector<int> simple_labeling(const FeatureImage& image, const PriorSet& priors,
                                 const MetricSpace& space, double sigma);

// Prior construction for textures: sample `patch_count` random rectangular
// patches from the image, compute each patch's feature mean and covariance,
// and average them. Seeded for reproducibility.
CovarianceFeature texture_prior(const GrayImage& image, const TextureParams& params,
                                int patch_count, int patch_side, std::mt19937_64& rng);

}  // namespace imlabel
