#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "imlabel/metric.hpp"

namespace imlabel {

// Image grid with row-major linear indexing i = row*width + col.
struct GridGeometry {
  int height = 0;
  int width = 0;

  int size() const { return height * width; }
  int index(int row, int col) const { return row * width + col; }
  std::pair<int, int> coords(int i) const { return {i / width, i % width}; }

  // Half-sample mirror: reflections map -1 -> 0, -2 -> 1, n -> n-1, ...
  // This padding makes folded window weights exactly symmetric.
  static int mirror(int t, int n) {
    while (t < 0 || t >= n) t = (t < 0) ? -t - 1 : 2 * n - 1 - t;
    return t;
  }
  int mirror_row(int r) const { return mirror(r, height); }
  int mirror_col(int c) const { return mirror(c, width); }
};

// Grid of metric-space features with a validity mask (missing pixels).
struct FeatureImage {
  GridGeometry geom;
  std::vector<Point> features;     // size n
  std::vector<std::uint8_t> valid; // size n, nonzero = available

  int size() const { return geom.size(); }
  bool is_valid(int i) const { return valid[static_cast<size_t>(i)] != 0; }
  int count_valid() const;
  // Checks sizes and that at least one pixel is valid.
  void validate() const;
};

// K prior features, one per label.
struct PriorSet {
  std::vector<Point> priors;
  int label_count() const { return static_cast<int>(priors.size()); }
};

}  // namespace imlabel
