#include "ldcma/gauss.hpp"

#include <cmath>

#include "ldcma/errors.hpp"

namespace ldcma {

namespace {

// Rational approximations from the Cephes ndtri routine (Moshier, 1989).
// Relative error stays below ~1e-15 on its own; the Halley polish below
// pushes the CDF round trip to machine level.

constexpr double kSqrt2Pi = 2.50662827463100050242;

constexpr double kP0[5] = {
    -5.99633501014107895267e1, 9.80010754185999661536e1,
    -5.66762857469070293439e1, 1.39312609387279679503e1,
    -1.23916583867381258016e0,
};

constexpr double kQ0[8] = {
    1.95448858338141759834e0,  4.67627912898881538453e0,
    8.63602421390890590575e1,  -2.25462687854119370527e2,
    2.00260212380060660359e2,  -8.20372256168333339912e1,
    1.59056225126211695515e1,  -1.18331621121330003142e0,
};

constexpr double kP1[9] = {
    4.05544892305962419923e0,   3.15251094599893866154e1,
    5.71628192246421288162e1,   4.40805073893200834700e1,
    1.46849561928858024014e1,   2.18663306850790267539e0,
    -1.40256079171354495875e-1, -3.50424626827848203418e-2,
    -8.57456785154685413611e-4,
};

constexpr double kQ1[8] = {
    1.57799883256466749731e1,   4.53907635128879210584e1,
    4.13172038254672030440e1,   1.50425385692907503408e1,
    2.50464946208309415979e0,   -1.42182922854787788574e-1,
    -3.80806407691578277194e-2, -9.33259480895457427372e-4,
};

constexpr double kP2[9] = {
    3.23774891776946035970e0,  6.91522889068984211695e0,
    3.93881025292474443415e0,  1.33303460815807542389e0,
    2.01485389549179081538e-1, 1.23716634817820021358e-2,
    3.01581553508235416007e-4, 2.65806974686737550832e-6,
    6.23974539184983293730e-9,
};

constexpr double kQ2[8] = {
    6.02427039364742014255e0,  3.67983563856160859403e0,
    1.37702099489081330271e0,  2.16236993594496635890e-1,
    1.34204006088543189037e-2, 3.28014464682127739104e-4,
    2.89247864745380683936e-6, 6.79019408009981274425e-9,
};

double polevl(double x, const double* coef, int n) {
  double ans = coef[0];
  for (int i = 1; i <= n; ++i) ans = ans * x + coef[i];
  return ans;
}

double p1evl(double x, const double* coef, int n) {
  double ans = x + coef[0];
  for (int i = 1; i < n; ++i) ans = ans * x + coef[i];
  return ans;
}

// Cephes estimate for p in (0, 0.5]; returns x <= 0.
double ndtri_estimate(double p) {
  constexpr double kExpMinus2 = 0.13533528323661269189;
  if (p > kExpMinus2) {
    const double y = p - 0.5;
    const double y2 = y * y;
    double x = y + y * (y2 * polevl(y2, kP0, 4) / p1evl(y2, kQ0, 8));
    return x * kSqrt2Pi;
  }
  const double x = std::sqrt(-2.0 * std::log(p));
  const double x0 = x - std::log(x) / x;
  const double z = 1.0 / x;
  const double x1 = x < 8.0 ? z * polevl(z, kP1, 8) / p1evl(z, kQ1, 8)
                            : z * polevl(z, kP2, 8) / p1evl(z, kQ2, 8);
  return -(x0 - x1);
}

}  // namespace

double norm_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double inv_norm_cdf(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw SpecError("inv_norm_cdf: argument must lie strictly inside (0,1)");

  // Work on the lower half where erfc sees a nonnegative argument; the
  // complement 1-u is exact for u in [0.5, 1).
  const bool upper = u > 0.5;
  const double p = upper ? 1.0 - u : u;

  double x = ndtri_estimate(p);

  // One Halley iteration on f(x) = norm_cdf(x) - p, using f''/f' = -x.
  const double f = norm_cdf(x) - p;
  const double pdf = std::exp(-0.5 * x * x) / kSqrt2Pi;
  if (pdf > 0.0) {
    const double r = f / pdf;
    x -= r / (1.0 + 0.5 * x * r);
  }
  return upper ? -x : x;
}

void sanitize_and_transform(std::span<const double> raw, std::span<double> out) {
  constexpr double kEps = 0x1.0p-53;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    double u = raw[i];
    if (u < kEps) u = kEps;
    if (u > 1.0 - kEps) u = 1.0 - kEps;
    out[i] = inv_norm_cdf(u);
  }
}

}  // namespace ldcma
