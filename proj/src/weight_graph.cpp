#include "imlabel/weight_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "imlabel/parallel.hpp"

namespace imlabel {

WeightGraph::WeightGraph(std::vector<std::vector<Entry>> rows, bool symmetric)
    : rows_(std::move(rows)), symmetric_(symmetric) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    auto& row = rows_[static_cast<size_t>(i)];
    if (!std::is_sorted(row.begin(), row.end(),
                        [](const Entry& a, const Entry& b) { return a.first < b.first; }))
      std::sort(row.begin(), row.end());
    double sum = 0.0;
    int prev = -1;
    for (const auto& [j, w] : row) {
      if (j < 0 || j >= n) throw std::invalid_argument("weight graph: index out of range");
      if (j == prev) throw std::invalid_argument("weight graph: duplicate neighbor");
      if (!(w > 0.0)) throw std::invalid_argument("weight graph: nonpositive weight");
      prev = j;
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-6)
      throw std::invalid_argument("weight graph: row " + std::to_string(i) +
                                  " sums to " + std::to_string(sum));
  }
}

double WeightGraph::weight(int i, int j) const {
  const auto& row = rows_[static_cast<size_t>(i)];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int v) { return e.first < v; });
  return (it != row.end() && it->first == j) ? it->second : 0.0;
}

double WeightGraph::row_sum(int i) const {
  double sum = 0.0;
  for (const auto& [j, w] : rows_[static_cast<size_t>(i)]) sum += w;
  return sum;
}

bool WeightGraph::has_positive_diagonal() const {
  for (int i = 0; i < size(); ++i)
    if (weight(i, i) <= 0.0) return false;
  return true;
}

double WeightGraph::max_asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < size(); ++i)
    for (const auto& [j, w] : row(i))
      worst = std::max(worst, std::abs(w - weight(j, i)));
  return worst;
}

void WeightGraph::multiply(const Eigen::MatrixXd& x, Eigen::MatrixXd& out,
                           int threads) const {
  const int n = size();
  if (x.rows() != n) throw std::invalid_argument("multiply: row count mismatch");
  out.resize(n, x.cols());
  parallel_for(n, threads, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(x.cols());
      for (const auto& [j, w] : rows_[static_cast<size_t>(i)]) acc += w * x.row(j);
      out.row(i) = acc;
    }
  });
}

Eigen::MatrixXd WeightGraph::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
  for (int i = 0; i < size(); ++i)
    for (const auto& [j, w] : row(i)) m(i, j) = w;
  return m;
}

WeightGraph build_local_uniform(const GridGeometry& geom, int s) {
  if (geom.height < 1 || geom.width < 1)
    throw std::invalid_argument("build_local_uniform: empty grid");
  if (s < 1 || s % 2 == 0)
    throw std::invalid_argument("build_local_uniform: window side must be odd and positive");
  if (s > 2 * std::max(geom.height, geom.width))
    throw std::invalid_argument("build_local_uniform: window larger than the mirrored image");

  const int n = geom.size();
  const int h = s / 2;
  const double unit = 1.0 / (static_cast<double>(s) * s);
  std::vector<std::map<int, int>> hits(static_cast<size_t>(n));
  for (int r = 0; r < geom.height; ++r) {
    for (int c = 0; c < geom.width; ++c) {
      auto& row = hits[static_cast<size_t>(geom.index(r, c))];
      for (int dr = -h; dr <= h; ++dr)
        for (int dc = -h; dc <= h; ++dc)
          row[geom.index(geom.mirror_row(r + dr), geom.mirror_col(c + dc))] += 1;
    }
  }
  // integer hit counts times a shared constant: rho_ij == rho_ji exactly
  std::vector<std::vector<WeightGraph::Entry>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (const auto& [j, count] : hits[static_cast<size_t>(i)])
      rows[static_cast<size_t>(i)].emplace_back(j, count * unit);
  return WeightGraph(std::move(rows), /*symmetric=*/true);
}

WeightGraph build_gaussian(const GridGeometry& geom, int s, double sigma) {
  if (geom.height < 1 || geom.width < 1)
    throw std::invalid_argument("build_gaussian: empty grid");
  if (s < 1 || s % 2 == 0)
    throw std::invalid_argument("build_gaussian: window side must be odd and positive");
  if (!(sigma > 0.0)) throw std::invalid_argument("build_gaussian: sigma must be positive");
  if (s > 2 * std::max(geom.height, geom.width))
    throw std::invalid_argument("build_gaussian: window larger than the mirrored image");

  const int n = geom.size();
  const int h = s / 2;
  // truncated outside [-3 sigma, 3 sigma] per coordinate
  const int radius = std::min<int>(h, static_cast<int>(std::floor(3.0 * sigma)));
  double mass = 0.0;
  for (int dr = -radius; dr <= radius; ++dr)
    for (int dc = -radius; dc <= radius; ++dc)
      mass += std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));

  std::vector<std::map<int, double>> acc(static_cast<size_t>(n));
  for (int r = 0; r < geom.height; ++r) {
    for (int c = 0; c < geom.width; ++c) {
      auto& row = acc[static_cast<size_t>(geom.index(r, c))];
      for (int dr = -radius; dr <= radius; ++dr)
        for (int dc = -radius; dc <= radius; ++dc) {
          const int j = geom.index(geom.mirror_row(r + dr), geom.mirror_col(c + dc));
          row[j] += std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
        }
    }
  }
  // folded sums can differ in accumulation order between (i,j) and (j,i);
  // copy the i<j value across so stored pairs match bit for bit
  for (int i = 0; i < n; ++i)
    for (auto& [j, w] : acc[static_cast<size_t>(i)])
      if (j > i) acc[static_cast<size_t>(j)][i] = w;

  std::vector<std::vector<WeightGraph::Entry>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (const auto& [j, w] : acc[static_cast<size_t>(i)])
      rows[static_cast<size_t>(i)].emplace_back(j, w / mass);
  return WeightGraph(std::move(rows), /*symmetric=*/true);
}

void NonlocalParams::validate() const {
  if (patch_half < 0) throw std::invalid_argument("nonlocal: patch_half must be >= 0");
  if (neighbor_count < 1) throw std::invalid_argument("nonlocal: neighbor_count must be positive");
  if (window < 1 || window % 2 == 0)
    throw std::invalid_argument("nonlocal: search window side must be odd and positive");
  if (neighbor_count > window * window)
    throw std::invalid_argument("nonlocal: neighbor_count exceeds the search window");
  if (!(sigma_patch > 0.0) || !(sigma_weight > 0.0))
    throw std::invalid_argument("nonlocal: sigmas must be positive");
}

WeightGraph build_nonlocal(const FeatureImage& image, const MetricSpace& space,
                           const NonlocalParams& params, int threads) {
  image.validate();
  params.validate();
  const GridGeometry& geom = image.geom;
  const int n = geom.size();
  const int ph = params.patch_half;
  const int side = 2 * ph + 1;
  const int th = params.window / 2;

  // patch Gaussian normalized to sum 1, so d_p is a weighted average
  Eigen::MatrixXd kernel(side, side);
  for (int a = -ph; a <= ph; ++a)
    for (int b = -ph; b <= ph; ++b)
      kernel(a + ph, b + ph) =
          std::exp(-(a * a + b * b) / (2.0 * params.sigma_patch * params.sigma_patch));
  kernel /= kernel.sum();

  // pairs where either pixel is missing contribute 0, extending the
  // missing-pixel distance convention to patch distances
  auto patch_distance = [&](int ri, int ci, int rj, int cj) {
    double d = 0.0;
    for (int a = -ph; a <= ph; ++a) {
      for (int b = -ph; b <= ph; ++b) {
        const int p = geom.index(geom.mirror_row(ri + a), geom.mirror_col(ci + b));
        const int q = geom.index(geom.mirror_row(rj + a), geom.mirror_col(cj + b));
        if (!image.is_valid(p) || !image.is_valid(q)) continue;
        d += kernel(a + ph, b + ph) *
             space.distance(image.features[static_cast<size_t>(p)],
                            image.features[static_cast<size_t>(q)]);
      }
    }
    return d;
  };

  std::vector<std::vector<std::pair<double, int>>> selected(static_cast<size_t>(n));
  parallel_for(n, threads, [&](int begin, int end) {
    std::vector<std::pair<double, int>> cand;
    for (int i = begin; i < end; ++i) {
      const auto [r, c] = geom.coords(i);
      cand.clear();
      // search window clipped to the grid; at corners it may hold fewer
      // than neighbor_count pixels, in which case all of them are kept
      for (int wr = std::max(0, r - th); wr <= std::min(geom.height - 1, r + th); ++wr)
        for (int wc = std::max(0, c - th); wc <= std::min(geom.width - 1, c + th); ++wc)
          cand.emplace_back(patch_distance(r, c, wr, wc), geom.index(wr, wc));
      std::sort(cand.begin(), cand.end());  // ties resolve by linear index
      const size_t keep = std::min<size_t>(cand.size(),
                                           static_cast<size_t>(params.neighbor_count));
      selected[static_cast<size_t>(i)].assign(cand.begin(), cand.begin() + keep);
    }
  });

  // symmetrize neighborhoods by union; d_p is symmetric, so writing both
  // directions with the same value keeps the pre-normalization weights equal
  std::vector<std::map<int, double>> dist(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (const auto& [d, j] : selected[static_cast<size_t>(i)]) {
      dist[static_cast<size_t>(i)][j] = d;
      dist[static_cast<size_t>(j)][i] = d;
    }
  }

  const double denom = 2.0 * params.sigma_weight * params.sigma_weight;
  std::vector<std::vector<WeightGraph::Entry>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const auto& [j, d] : dist[static_cast<size_t>(i)]) sum += std::exp(-d / denom);
    auto& row = rows[static_cast<size_t>(i)];
    for (const auto& [j, d] : dist[static_cast<size_t>(i)])
      row.emplace_back(j, std::exp(-d / denom) / sum);
  }
  // row normalization destroys symmetry; the analysis side refuses such
  // graphs unless symmetrized() is applied first
  return WeightGraph(std::move(rows), /*symmetric=*/false);
}

WeightGraph symmetrized(const WeightGraph& g, double* asymmetry_after) {
  const int n = g.size();
  std::vector<std::map<int, double>> acc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (const auto& [j, w] : g.row(i)) {
      acc[static_cast<size_t>(i)][j] += 0.5 * w;
      acc[static_cast<size_t>(j)][i] += 0.5 * w;
    }
  std::vector<std::vector<WeightGraph::Entry>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const auto& [j, w] : acc[static_cast<size_t>(i)]) sum += w;
    for (const auto& [j, w] : acc[static_cast<size_t>(i)])
      rows[static_cast<size_t>(i)].emplace_back(j, w / sum);
  }
  auto rows_copy = rows;
  WeightGraph averaged(std::move(rows), /*symmetric=*/false);
  const double delta = averaged.max_asymmetry();
  if (asymmetry_after) *asymmetry_after = delta;
  if (delta <= 1e-12) return WeightGraph(std::move(rows_copy), true);
  return averaged;
}

void save_graph(std::ostream& out, const WeightGraph& g) {
  out << g.size() << " rows\n";
  char buf[64];
  for (int i = 0; i < g.size(); ++i) {
    for (const auto& [j, w] : g.row(i)) {
      if (w < 1e-16) continue;
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", i, j, w);
      out << buf;
    }
  }
}

void save_graph(const std::string& path, const WeightGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  save_graph(out, g);
}

WeightGraph load_graph(std::istream& in) {
  int n = 0;
  std::string tag;
  if (!(in >> n >> tag) || tag != "rows" || n < 1)
    throw std::runtime_error("graph file: bad header, expected \"<n> rows\"");
  std::vector<std::vector<WeightGraph::Entry>> rows(static_cast<size_t>(n));
  int i = 0, j = 0;
  double w = 0.0;
  while (in >> i >> j >> w) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::runtime_error("graph file: index out of range");
    rows[static_cast<size_t>(i)].emplace_back(j, w);
  }
  WeightGraph g(std::move(rows), /*symmetric=*/false);
  if (g.max_asymmetry() <= 1e-12) {
    std::vector<std::vector<WeightGraph::Entry>> copy;
    copy.reserve(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) copy.push_back(g.row(r));
    return WeightGraph(std::move(copy), true);
  }
  return g;
}

WeightGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

}  // namespace imlabel
