#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ldcma/run_record.hpp"

namespace ldcma {

/// Mean fraction of log-spaced precision targets attained, per budget.
struct EafCurve {
  std::vector<std::uint64_t> budget_grid;  // increasing evaluation counts
  std::vector<double> values;              // in [0,1], nondecreasing
};

/// Attainment curve over `n_targets` log10-uniform precision targets in
/// [1e-8, 1e2]. A target counts as attained when best precision <= target.
/// The budget grid is the union of the runs' checkpoints up to the smallest
/// common budget.
EafCurve eaf_curve(const std::vector<RunRecord>& runs, int n_targets = 51);

/// Trapezoidal integral of the curve against log10(evaluations) over
/// [1, budget], normalized by log10(budget) into [0,1].
double eaf_auc(const EafCurve& curve, std::uint64_t budget);

/// Key of one aggregation cell. k == 0 encodes an endless source.
struct CellKey {
  std::string sampler;
  std::uint64_t k = 0;
  int dim = 0;
  auto operator<=>(const CellKey&) const = default;
};

/// Min-max normalization within each dimension. Dimensions whose values are
/// all equal map to 0.5 and are reported through `degenerate_dims`.
std::map<CellKey, double> normalize_per_dim(
    const std::map<CellKey, double>& auc_table,
    std::set<int>* degenerate_dims = nullptr);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double pearson_r = 0.0;
  bool degenerate = false;  // zero variance on either axis
};

/// Ordinary least squares of auc on log10 discrepancy plus the Pearson
/// correlation; needs at least 3 points.
FitResult discrepancy_performance_fit(
    std::span<const std::pair<double, double>> points);

}  // namespace ldcma
