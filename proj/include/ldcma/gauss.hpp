#pragma once

#include <span>

namespace ldcma {

/// Standard normal CDF evaluated through the complementary error function.
double norm_cdf(double x);

/// Inverse standard normal CDF for u in (0,1). Piecewise rational
/// approximation refined by one Halley iteration on norm_cdf(x) - u;
/// absolute error stays below 1e-9 across [1e-15, 1 - 1e-15].
double inv_norm_cdf(double u);

/// Clamps raw unit-cube coordinates into [2^-53, 1 - 2^-53] and maps them
/// through inv_norm_cdf; the output is always finite.
void sanitize_and_transform(std::span<const double> raw, std::span<double> out);

}  // namespace ldcma
