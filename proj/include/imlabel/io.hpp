#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "imlabel/features.hpp"
#include "imlabel/image.hpp"

namespace imlabel {

// Parse failures carry the offending line number in the message.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct RgbImage {
  GridGeometry geom;
  std::vector<Eigen::Vector3d> pixels;  // components in [0,1]
};

// PGM P2/P5, intensities scaled to [0,1].
GrayImage read_pgm(const std::string& path);
GrayImage read_pgm(std::istream& in, const std::string& name = "<stream>");
// PPM P3/P6, scaled to [0,1].
RgbImage read_ppm(const std::string& path);
RgbImage read_ppm(std::istream& in, const std::string& name = "<stream>");

void write_pgm(const std::string& path, const GridGeometry& geom,
               const std::vector<int>& gray, int maxval = 255);

// Label map as plain PGM (P2) with labels scaled to gray levels, plus a
// sidecar "<path>.labels.txt" mapping gray level -> label index.
void write_label_map(const std::string& path, const GridGeometry& geom,
                     const std::vector<int>& labels, int label_count);

// Comma- or whitespace-separated numeric matrix; "nan" cells allowed when
// allow_nan is set. All rows must have equal length.
Eigen::MatrixXd read_csv_matrix(const std::string& path, bool allow_nan = false);
Eigen::MatrixXd read_csv_matrix(std::istream& in, bool allow_nan = false,
                                const std::string& name = "<stream>");

// 17 significant digits, comma separated: doubles round-trip exactly.
void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& m);
void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& m);

// Feature-matrix interpretations of a CSV. Rows are pixels (row-major grid
// scan); any NaN in a row marks the pixel missing.
enum class FeatureFormat { vec, spd, quat, quatphase, cov5 };
FeatureFormat parse_feature_format(const std::string& text, int* spd_size);
FeatureImage features_from_csv(const Eigen::MatrixXd& m, const GridGeometry& geom,
                               FeatureFormat format, int spd_size = 3);
PriorSet priors_from_csv(const Eigen::MatrixXd& m, FeatureFormat format,
                         int spd_size = 3);
FeatureImage features_from_rgb(const RgbImage& image);
FeatureImage features_from_gray(const GrayImage& image);

// Descriptor file: 5 + 15 columns per pixel (mu then upper-triangular C,
// row-major).
void write_descriptors(std::ostream& out, const std::vector<CovarianceFeature>& d);
std::vector<CovarianceFeature> read_descriptors(std::istream& in);

// Validity mask: n numeric values, 0 = missing.
std::vector<std::uint8_t> read_mask(const std::string& path, int expected_size);

}  // namespace imlabel
