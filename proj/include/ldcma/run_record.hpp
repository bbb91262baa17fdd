#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ldcma {

/// Best-so-far precision trajectory of one optimization run plus the
/// metadata needed to aggregate it. Trajectories are compressed to geometric
/// checkpoints: every evaluation up to 100, then indices growing by ~1%.
struct RunRecord {
  int fid = 0;
  int iid = 0;
  int dim = 0;
  std::string sampler_kind;   // uniform / halton / sobol / optimized / imported
  std::uint64_t cache_k = 0;  // 0 means an endless source
  int lambda = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t evals_used = 0;
  std::uint64_t generations = 0;
  double final_precision = std::numeric_limits<double>::infinity();
  double set_l2 = std::numeric_limits<double>::quiet_NaN();  // cached set only

  /// (evaluation index, best-so-far precision), strictly increasing indices.
  std::vector<std::pair<std::uint64_t, double>> checkpoints;

  /// One fingerprint per generation over the raw unit-cube batch, in draw
  /// order. Present in memory after run(); files carry only the summary.
  std::vector<std::uint64_t> batch_hashes;

  // Raw-batch cycling summary (persisted).
  std::uint64_t batch_first_hash = 0;
  std::uint64_t batch_distinct = 0;
  std::uint64_t batch_period = 0;  // smallest p with h[i] == h[i+p]; 0 = none

  /// Best-so-far precision at an arbitrary evaluation index (step lookup).
  double best_precision_at(std::uint64_t eval) const;

  /// Fills batch_first_hash / batch_distinct / batch_period from
  /// batch_hashes.
  void summarize_batches();
};

/// Next checkpoint index after a record at `eval`.
std::uint64_t next_checkpoint(std::uint64_t eval);

void save_run_record(const RunRecord& rec, const std::string& path);
RunRecord load_run_record(const std::string& path);

}  // namespace ldcma
