#include "ldcma/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ldcma/errors.hpp"

namespace ldcma {

namespace {

std::vector<double> precision_targets(int n_targets) {
  // log10-uniform from 1e2 down to 1e-8.
  std::vector<double> targets(static_cast<std::size_t>(n_targets));
  for (int i = 0; i < n_targets; ++i) {
    const double e = 2.0 - 10.0 * static_cast<double>(i) /
                               static_cast<double>(n_targets - 1);
    targets[static_cast<std::size_t>(i)] = std::pow(10.0, e);
  }
  return targets;
}

double attained_fraction(const RunRecord& run, std::uint64_t eval,
                         const std::vector<double>& targets) {
  const double best = run.best_precision_at(eval);
  std::size_t attained = 0;
  for (double t : targets) attained += best <= t;
  return static_cast<double>(attained) / static_cast<double>(targets.size());
}

}  // namespace

EafCurve eaf_curve(const std::vector<RunRecord>& runs, int n_targets) {
  if (runs.empty()) throw SpecError("eaf_curve: no runs");
  if (n_targets < 2) throw SpecError("eaf_curve: need at least 2 targets");
  const int dim = runs.front().dim;
  std::uint64_t common_budget = runs.front().budget;
  for (const auto& r : runs) {
    if (r.dim != dim) throw SpecError("eaf_curve: mixed dimensions");
    common_budget = std::min(common_budget, r.budget);
  }

  std::vector<std::uint64_t> grid;
  for (const auto& r : runs)
    for (const auto& [eval, prec] : r.checkpoints)
      if (eval <= common_budget) grid.push_back(eval);
  grid.push_back(common_budget);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const auto targets = precision_targets(n_targets);
  EafCurve curve;
  curve.budget_grid = std::move(grid);
  curve.values.reserve(curve.budget_grid.size());
  for (const auto eval : curve.budget_grid) {
    double sum = 0.0;
    for (const auto& r : runs) sum += attained_fraction(r, eval, targets);
    curve.values.push_back(sum / static_cast<double>(runs.size()));
  }
  return curve;
}

double eaf_auc(const EafCurve& curve, std::uint64_t budget) {
  if (curve.budget_grid.empty()) throw SpecError("eaf_auc: empty curve");
  if (budget < 1) throw SpecError("eaf_auc: budget must be positive");
  const double log_b = std::log10(static_cast<double>(budget));
  if (log_b <= 0.0) return curve.values.front();

  double integral = 0.0;
  double prev_x = 0.0;  // log10(1)
  double prev_v = curve.values.front();
  for (std::size_t i = 0; i < curve.budget_grid.size(); ++i) {
    if (curve.budget_grid[i] > budget) break;
    const double x = std::log10(static_cast<double>(curve.budget_grid[i]));
    if (x > prev_x) {
      // The curve is a step function: it holds prev_v on [prev_x, x).
      integral += prev_v * (x - prev_x);
      prev_x = x;
    }
    prev_v = curve.values[i];
  }
  integral += prev_v * (log_b - prev_x);
  return integral / log_b;
}

std::map<CellKey, double> normalize_per_dim(
    const std::map<CellKey, double>& auc_table, std::set<int>* degenerate_dims) {
  std::map<int, std::pair<double, double>> ranges;  // dim -> (min, max)
  for (const auto& [key, value] : auc_table) {
    auto it = ranges.find(key.dim);
    if (it == ranges.end()) {
      ranges.emplace(key.dim, std::pair{value, value});
    } else {
      it->second.first = std::min(it->second.first, value);
      it->second.second = std::max(it->second.second, value);
    }
  }
  std::map<CellKey, double> out;
  for (const auto& [key, value] : auc_table) {
    const auto [lo, hi] = ranges.at(key.dim);
    if (hi > lo) {
      out[key] = (value - lo) / (hi - lo);
    } else {
      out[key] = 0.5;
      if (degenerate_dims) degenerate_dims->insert(key.dim);
    }
  }
  return out;
}

FitResult discrepancy_performance_fit(
    std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw SpecError("discrepancy_performance_fit: need at least 3 points");
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  FitResult fit;
  if (sxx <= 0.0 || syy <= 0.0) {
    fit.degenerate = true;
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    fit.pearson_r = 0.0;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.pearson_r = sxy / std::sqrt(sxx * syy);
  return fit;
}

}  // namespace ldcma
