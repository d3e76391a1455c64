#pragma once

#include <string>

namespace imlabel {

// Resolved run settings. Round-trips losslessly through its textual form and
// is echoed into every run report.
struct RunConfig {
  std::string input;
  std::string format = "vec";
  int height = 0;
  int width = 0;
  std::string priors;
  std::string init;
  std::string mask;
  std::string metric = "euclidean";
  std::string alpha;  // empty = same as rho
  std::string rho = "uniform:3";
  double epsilon = 1e-10;
  double entropy_threshold = 1e-3;
  int max_iters = 1000;
  std::string variant = "standard";
  std::string output;
  std::string dump_assignment;
  int threads = 1;
  unsigned long long seed = 0;
  bool symmetrize = false;

  std::string to_text() const;
  static RunConfig from_text(const std::string& text);
};

}  // namespace imlabel
