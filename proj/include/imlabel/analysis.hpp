#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "imlabel/labeling.hpp"
#include "imlabel/spectral.hpp"

namespace imlabel {

// First-step variant the coefficients describe.
enum class FirstStep { standard, apss };

struct PixelVerdict {
  enum class Kind { vertex, interior, indeterminate };
  Kind kind = Kind::interior;
  int label = 0;           // 1-based predicted vertex when kind == vertex
  int decisive_group = 0;  // smallest decisive s when kind == vertex
  Eigen::VectorXd limit;   // predicted limit vector (vertex and interior)
};

struct CollapseResult {
  enum class Status { collapse, no_strict_maximizer, not_applicable };
  Status status = Status::not_applicable;
  int label = 0;  // 1-based, set when status == collapse
  std::string reason;
};

// Spectral convergence analysis of the eps = 0 iteration for a positive
// initialization A and symmetric stochastic weight matrix P.
class SpectralAnalysis {
 public:
  SpectralAnalysis(const Eigen::MatrixXd& a, const Eigen::MatrixXd& p);
  SpectralAnalysis(const Eigen::MatrixXd& a, const WeightGraph& p);
  // For tests that need a hand-picked eigenbasis.
  SpectralAnalysis(const Eigen::MatrixXd& a, EigenStructure eig,
                   Eigen::VectorXd p_diagonal);

  const EigenStructure& eig() const { return eig_; }
  const Eigen::MatrixXd& a_hat() const { return a_hat_; }
  // 1e-9 relative to the largest |c_{l,k}(s)| over the whole instance.
  double zero_tolerance() const { return zero_tol_; }

  // c_{l,k}(s) = sum over eigenvalue group s of q_ij (a_hat_jl - a_hat_jk),
  // for s = 1..s_hat. Antisymmetric in (l,k). l, k are 0-based here.
  std::vector<double> coefficients(int i, int l, int k) const;
  // The APSS analogue with the lambda_j^{-1} factor; throws
  // std::domain_error when P is singular (not applicable).
  std::vector<double> coefficients_apss(int i, int l, int k) const;

  // Applies the sign condition on the first nonzero coefficient: vertex k
  // when for every l != k the first nonzero c_{l,k}(s) is negative.
  // Coefficients within a factor 10 of the zero tolerance make the verdict
  // indeterminate instead of guessed.
  PixelVerdict predict_limit(int i, FirstStep variant = FirstStep::standard) const;

  // Trivial-collapse condition: strict maximizer of the column products of A
  // (computed as column log-sums). Preconditions: positive diagonal, simple
  // eigenvalue 1, no eigenvalue -1.
  CollapseResult check_global_collapse() const;

  Eigen::VectorXd column_log_sums() const;
  int pixel_count() const { return static_cast<int>(log_a_.rows()); }
  int label_count() const { return static_cast<int>(log_a_.cols()); }

 private:
  std::vector<double> group_coefficients(int i, int l, int k, bool apss,
                                         int group_limit) const;
  void finish_setup();

  EigenStructure eig_;
  Eigen::MatrixXd log_a_;
  Eigen::MatrixXd a_hat_;   // Q^T log A
  Eigen::VectorXd p_diag_;
  double zero_tol_ = 0.0;
};

struct ConvergenceReport {
  std::vector<PixelVerdict> verdicts;
  CollapseResult collapse;
  Eigen::VectorXd column_log_sums;
  std::vector<double> eigenvalues;
  int positive_groups = 0;
};

ConvergenceReport analyze_convergence(const SpectralAnalysis& analysis,
                                      FirstStep variant = FirstStep::standard);
void write_report_text(std::ostream& out, const ConvergenceReport& report);
void write_report_csv(std::ostream& out, const ConvergenceReport& report);

struct Example26Run {
  double epsilon = 0.0;
  std::vector<int> labels;
  int iterations = 0;
  bool converged = false;
  Eigen::MatrixXd w;
};

struct Example26Report {
  Eigen::MatrixXd a;                // the 10 x 3 initialization
  std::vector<Example26Run> runs;   // eps = 1e-10, 1e-11, 1e-81
  std::vector<int> labels_eps0;
  int settle_iteration = 0;
  Eigen::Vector3d column_products;  // (64, 8, 243) / 2e7
  CollapseResult collapse;
  bool matches_reference = false;
  std::vector<std::string> mismatches;
};

// Runs the length-10 signal example end to end (three eps values, the eps=0
// log-domain iteration, and the collapse check) and compares everything
// against the frozen reference labeling.
Example26Report reproduce_example_2_6();

// The initialization matrix and weight graph of that example.
Eigen::MatrixXd example_2_6_initialization();
WeightGraph example_2_6_weights();

}  // namespace imlabel
