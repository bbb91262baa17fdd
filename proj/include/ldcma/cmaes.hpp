#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <vector>

#include "ldcma/bench.hpp"
#include "ldcma/run_record.hpp"
#include "ldcma/sampler_source.hpp"

namespace ldcma {

/// Strategy constants. Population and recombination settings follow the
/// standard CMA-ES defaults as functions of dimension and mu_eff.
struct CmaParams {
  int dim = 0;
  int lambda = 0;
  int mu = 0;
  Eigen::VectorXd weights;  // mu positive entries, nonincreasing, sum 1
  double mu_eff = 0.0;
  double c_sigma = 0.0;
  double d_sigma = 0.0;
  double c_c = 0.0;
  double c1 = 0.0;
  double c_mu = 0.0;
  double chi_n = 0.0;  // E||N(0,I)||
  double sigma0 = 2.0;
  Eigen::VectorXd m0;  // initial mean; zeros unless the caller sets it
};

/// lambda = 4 + floor(3 ln d) unless overridden (minimum 2); mu = lambda/2;
/// log-linear weights.
CmaParams default_params(int dim, int lambda_override = 0);

/// One offspring through the three sampling stages. raw is the consumed
/// unit-cube point; z, y, x are the standard-normal, shaped, and shifted
/// stages.
struct Candidate {
  Eigen::VectorXd raw;
  Eigen::VectorXd z;
  Eigen::VectorXd y;
  Eigen::VectorXd x;
  double fitness = std::numeric_limits<double>::quiet_NaN();
};

struct CmaState {
  Eigen::VectorXd m;
  double sigma = 0.0;
  Eigen::MatrixXd C;
  Eigen::MatrixXd B;   // eigenvectors of C
  Eigen::VectorXd D;   // square roots of the (repaired) eigenvalues
  Eigen::VectorXd p_sigma;
  Eigen::VectorXd p_c;
  std::uint64_t generation = 0;
};

CmaState initial_state(const CmaParams& params);

/// Draws lambda raw points from the source in stream order and runs each
/// through z = sanitize_and_transform(raw), y = B diag(D) z, x = m + sigma y.
std::vector<Candidate> ask(const CmaState& state, const CmaParams& params,
                           SamplerSource& source);

/// Ranks by fitness (minimization, ties by candidate order), recombines the
/// mean, updates both evolution paths, the step size, and the covariance,
/// then refreshes the eigendecomposition with eigenvalue repair.
void tell(CmaState& state, const CmaParams& params,
          std::vector<Candidate> candidates);

/// FNV-1a fingerprint of the batch's raw points in draw order.
std::uint64_t batch_hash(const std::vector<Candidate>& candidates);

/// Full optimization loop: ask / evaluate / tell until the budget leaves no
/// room for another generation or the best precision reaches the target.
/// Unconstrained, no restarts. The record's fid/iid/dim/sampler metadata is
/// filled from `problem`; sampler fields are left for the caller.
RunRecord run(Problem& problem, const CmaParams& params, SamplerSource& source,
              std::uint64_t budget, double target_precision = 1e-8);

}  // namespace ldcma
