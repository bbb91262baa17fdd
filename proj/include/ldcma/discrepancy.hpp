#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ldcma/point_set.hpp"

namespace ldcma {

enum class DiscrepancyMethod { kWarnock, kMonteCarlo, kLinfExact };

std::string to_string(DiscrepancyMethod m);

struct DiscrepancyReport {
  std::string set_id;
  int dim = 0;
  std::size_t n = 0;
  DiscrepancyMethod method = DiscrepancyMethod::kWarnock;
  double l2_star = 0.0;
  std::optional<double> mc_std_error;  // present iff method == kMonteCarlo
};

/// L2 star discrepancy by the Warnock closed form,
/// d2^2 = 3^-d - (2/N) sum_i prod_k (1 - x_ik^2)/2
///      + (1/N^2) sum_i sum_j prod_k (1 - max(x_ik, x_jk)),
/// with negative rounding residue clamped to zero before the square root.
double l2_star(const PointSet& ps);

struct McEstimate {
  double estimate;
  double std_error;  // delta-method standard error of the square root
};

/// Monte-Carlo estimate of the defining integral: mean squared local
/// discrepancy over `samples` uniform anchors q.
McEstimate l2_star_mc(const PointSet& ps, std::size_t samples,
                      std::uint64_t seed);

/// Exact L-infinity star discrepancy by critical-box enumeration. Both the
/// open and the closed point count are evaluated at every grid corner so the
/// supremum of the half-open definition is attained. Guarded against
/// exponential blowup: n^d * n must stay within 1e9.
double linf_star_exact(const PointSet& ps);

struct TaResult {
  PointSet subset;
  double start_l2 = 0.0;           // discrepancy of the starting subset
  double final_l2 = 0.0;           // discrepancy of the returned subset
  double initial_threshold = 0.0;  // calibrated from 100 random swaps
};

/// Threshold-Accepting search for a low-discrepancy k-subset of `base`.
/// Starts from the best of 10 seeded random k-subsets, swaps one selected
/// point for one unselected point per step, accepts when the l2 change stays
/// below a threshold decaying linearly to zero over `iters` steps, and
/// returns the best subset seen. The result never degrades the start.
TaResult ta_subset_search(const PointSet& base, std::size_t k,
                          std::size_t iters, std::uint64_t seed);

/// ta_subset_search, keeping only the subset (tagged kOptimized).
PointSet ta_subset(const PointSet& base, std::size_t k, std::size_t iters,
                   std::uint64_t seed);

}  // namespace ldcma
