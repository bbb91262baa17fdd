#include "ldcma/cmaes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "ldcma/errors.hpp"
#include "ldcma/gauss.hpp"
#include "ldcma/rng.hpp"

namespace ldcma {

CmaParams default_params(int dim, int lambda_override) {
  if (dim < 1) throw SpecError("default_params: dim must be positive");
  if (lambda_override != 0 && lambda_override < 2)
    throw SpecError("default_params: lambda must be at least 2");

  CmaParams p;
  p.dim = dim;
  p.lambda = lambda_override != 0
                 ? lambda_override
                 : 4 + static_cast<int>(std::floor(3.0 * std::log(dim)));
  p.mu = p.lambda / 2;

  p.weights.resize(p.mu);
  for (int i = 0; i < p.mu; ++i)
    p.weights[i] = std::log(p.mu + 0.5) - std::log(static_cast<double>(i + 1));
  p.weights /= p.weights.sum();

  p.mu_eff = 1.0 / p.weights.squaredNorm();

  const double d_ = dim;
  p.c_sigma = (p.mu_eff + 2.0) / (d_ + p.mu_eff + 5.0);
  p.d_sigma = 1.0 +
              2.0 * std::max(0.0, std::sqrt((p.mu_eff - 1.0) / (d_ + 1.0)) - 1.0) +
              p.c_sigma;
  p.c_c = (4.0 + p.mu_eff / d_) / (d_ + 4.0 + 2.0 * p.mu_eff / d_);
  p.c1 = 2.0 / ((d_ + 1.3) * (d_ + 1.3) + p.mu_eff);
  p.c_mu = std::min(1.0 - p.c1, 2.0 * (p.mu_eff - 2.0 + 1.0 / p.mu_eff) /
                                    ((d_ + 2.0) * (d_ + 2.0) + p.mu_eff));
  p.chi_n = std::sqrt(d_) * (1.0 - 1.0 / (4.0 * d_) + 1.0 / (21.0 * d_ * d_));
  p.m0 = Eigen::VectorXd::Zero(dim);
  return p;
}

CmaState initial_state(const CmaParams& params) {
  CmaState s;
  s.m = params.m0;
  s.sigma = params.sigma0;
  s.C = Eigen::MatrixXd::Identity(params.dim, params.dim);
  s.B = Eigen::MatrixXd::Identity(params.dim, params.dim);
  s.D = Eigen::VectorXd::Ones(params.dim);
  s.p_sigma = Eigen::VectorXd::Zero(params.dim);
  s.p_c = Eigen::VectorXd::Zero(params.dim);
  return s;
}

std::vector<Candidate> ask(const CmaState& state, const CmaParams& params,
                           SamplerSource& source) {
  if (source.dim() != params.dim)
    throw SpecError("ask: source dimension mismatch");
  std::vector<Candidate> out(static_cast<std::size_t>(params.lambda));
  for (auto& cand : out) {
    cand.raw.resize(params.dim);
    cand.z.resize(params.dim);
    source.next({cand.raw.data(), static_cast<std::size_t>(params.dim)});
    sanitize_and_transform({cand.raw.data(), static_cast<std::size_t>(params.dim)},
                           {cand.z.data(), static_cast<std::size_t>(params.dim)});
    cand.y = state.B * state.D.cwiseProduct(cand.z);
    cand.x = state.m + state.sigma * cand.y;
  }
  return out;
}

std::uint64_t batch_hash(const std::vector<Candidate>& candidates) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& cand : candidates)
    h = fnv1a64(cand.raw.data(),
                static_cast<std::size_t>(cand.raw.size()) * sizeof(double), h);
  return h;
}

namespace {

void refresh_eigensystem(CmaState& state) {
  state.C = 0.5 * (state.C + state.C.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(state.C);
  if (solver.info() != Eigen::Success)
    throw NumericError("tell: eigendecomposition failed");
  Eigen::VectorXd evals = solver.eigenvalues();
  state.B = solver.eigenvectors();

  // Repair: floor tiny or negative eigenvalues at 1e-30 of the largest.
  const double max_eval = evals.maxCoeff();
  if (!(max_eval > 0.0))
    throw NumericError("tell: covariance lost positive definiteness");
  const double floor_eval = 1e-30 * max_eval;
  bool repaired = false;
  for (int i = 0; i < evals.size(); ++i) {
    if (evals[i] < floor_eval) {
      evals[i] = floor_eval;
      repaired = true;
    }
  }
  if (repaired)
    state.C = state.B * evals.asDiagonal() * state.B.transpose();
  state.D = evals.cwiseSqrt();
}

}  // namespace

void tell(CmaState& state, const CmaParams& params,
          std::vector<Candidate> candidates) {
  if (static_cast<int>(candidates.size()) != params.lambda)
    throw SpecError("tell: expected exactly lambda candidates");
  for (const auto& cand : candidates)
    if (!std::isfinite(cand.fitness))
      throw SpecError("tell: non-finite fitness");

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].fitness < candidates[b].fitness;
  });

  const Eigen::VectorXd m_old = state.m;

  // Weighted recombination of the mu best.
  Eigen::VectorXd m_new = Eigen::VectorXd::Zero(params.dim);
  Eigen::VectorXd y_w = Eigen::VectorXd::Zero(params.dim);
  for (int i = 0; i < params.mu; ++i) {
    const auto& cand = candidates[order[static_cast<std::size_t>(i)]];
    m_new += params.weights[i] * cand.x;
    y_w += params.weights[i] * cand.y;
  }

  // Step-size path uses C^(-1/2) (m' - m) / sigma = B D^-1 B^T y_w.
  const Eigen::VectorXd c_inv_sqrt_yw =
      state.B * state.D.cwiseInverse().cwiseProduct(state.B.transpose() * y_w);
  state.p_sigma = (1.0 - params.c_sigma) * state.p_sigma +
                  std::sqrt(params.c_sigma * (2.0 - params.c_sigma) *
                            params.mu_eff) *
                      c_inv_sqrt_yw;

  const double ps_norm = state.p_sigma.norm();
  const auto g = static_cast<double>(state.generation + 1);
  const double expected_ps =
      std::sqrt(1.0 - std::pow(1.0 - params.c_sigma, 2.0 * g));
  const bool h_sigma =
      ps_norm / expected_ps <
      (1.4 + 2.0 / (params.dim + 1.0)) * params.chi_n;

  state.p_c = (1.0 - params.c_c) * state.p_c;
  if (h_sigma)
    state.p_c += std::sqrt(params.c_c * (2.0 - params.c_c) * params.mu_eff) * y_w;

  // Rank-one plus rank-mu covariance update.
  Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(params.dim, params.dim);
  for (int i = 0; i < params.mu; ++i) {
    const auto& cand = candidates[order[static_cast<std::size_t>(i)]];
    rank_mu.noalias() += params.weights[i] * cand.y * cand.y.transpose();
  }
  const double hs_correction =
      h_sigma ? 0.0 : params.c_c * (2.0 - params.c_c);
  state.C = (1.0 - params.c1 - params.c_mu) * state.C +
            params.c1 * (state.p_c * state.p_c.transpose() +
                         hs_correction * state.C) +
            params.c_mu * rank_mu;

  state.sigma *= std::exp(params.c_sigma / params.d_sigma *
                          (ps_norm / params.chi_n - 1.0));
  if (!(state.sigma > 0.0) || !std::isfinite(state.sigma))
    throw NumericError("tell: step size left the positive reals");

  state.m = m_new;
  refresh_eigensystem(state);
  ++state.generation;
}

RunRecord run(Problem& problem, const CmaParams& params, SamplerSource& source,
              std::uint64_t budget, double target_precision) {
  if (budget < static_cast<std::uint64_t>(params.lambda))
    throw SpecError("run: budget must cover at least one generation");

  RunRecord rec;
  rec.fid = problem.fid();
  rec.iid = problem.iid();
  rec.dim = problem.dim();
  rec.lambda = params.lambda;
  rec.budget = budget;

  CmaState state = initial_state(params);

  double best = std::numeric_limits<double>::infinity();
  std::uint64_t evals = 0;
  std::uint64_t next_cp = 1;

  while (evals + static_cast<std::uint64_t>(params.lambda) <= budget &&
         best > target_precision) {
    auto candidates = ask(state, params, source);
    rec.batch_hashes.push_back(batch_hash(candidates));
    for (auto& cand : candidates) {
      const EvalResult r = problem.evaluate(cand.x);
      cand.fitness = r.f;
      best = std::min(best, r.precision);
      ++evals;
      if (evals >= next_cp) {
        rec.checkpoints.emplace_back(evals, best);
        next_cp = next_checkpoint(evals);
      }
    }
    tell(state, params, std::move(candidates));
  }

  if (rec.checkpoints.empty() || rec.checkpoints.back().first != evals)
    rec.checkpoints.emplace_back(evals, best);
  rec.evals_used = evals;
  rec.final_precision = best;
  rec.summarize_batches();
  return rec;
}

}  // namespace ldcma
