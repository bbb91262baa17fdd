#include "ldcma/bench.hpp"

#include <algorithm>
#include <cmath>

#include "ldcma/errors.hpp"
#include "ldcma/gauss.hpp"
#include "ldcma/rng.hpp"

namespace ldcma {

namespace {

constexpr std::uint64_t kInstanceSalt = 0xb0bb0b5e0f2a71ceULL;

double gauss_draw(Rng& rng) {
  // Inverse-CDF sampling keeps instance construction deterministic without
  // depending on the library distribution implementations.
  double u = uniform_double(rng);
  if (u <= 0.0) u = 0x1.0p-53;
  return inv_norm_cdf(u);
}

// BBOB oscillation transform, coordinate-wise.
double t_osz(double x) {
  if (x == 0.0) return 0.0;
  const double xhat = std::log(std::abs(x));
  const double c1 = x > 0.0 ? 10.0 : 5.5;
  const double c2 = x > 0.0 ? 7.9 : 3.1;
  const double sign = x > 0.0 ? 1.0 : -1.0;
  return sign * std::exp(xhat + 0.049 * (std::sin(c1 * xhat) + std::sin(c2 * xhat)));
}

Eigen::VectorXd t_osz_vec(const Eigen::VectorXd& x) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = t_osz(x[i]);
  return out;
}

// BBOB asymmetry transform with exponent beta.
Eigen::VectorXd t_asy(const Eigen::VectorXd& x, double beta) {
  const auto d = static_cast<double>(x.size());
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) {
      const double expo =
          1.0 + beta * (static_cast<double>(i) / (d - 1.0)) * std::sqrt(x[i]);
      out[i] = std::pow(x[i], expo);
    } else {
      out[i] = x[i];
    }
  }
  return out;
}

// Diagonal conditioning matrix Lambda^alpha as a coefficient vector.
Eigen::VectorXd lambda_alpha(double alpha, int dim) {
  Eigen::VectorXd diag(dim);
  for (int i = 0; i < dim; ++i)
    diag[i] = std::pow(alpha, 0.5 * static_cast<double>(i) /
                                  (static_cast<double>(dim) - 1.0));
  return diag;
}

Eigen::MatrixXd random_rotation(int dim, Rng& rng) {
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gauss_draw(rng);
  // Modified Gram-Schmidt with a second sweep keeps the construction
  // reproducible to the last bit and orthogonal well past 1e-10.
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        const double proj = g.col(j).dot(g.col(k));
        g.col(j) -= proj * g.col(k);
      }
      const double norm = g.col(j).norm();
      if (norm < 1e-12)
        throw NumericError("rotation: degenerate Gram-Schmidt column");
      g.col(j) /= norm;
    }
  }
  return g;
}

}  // namespace

const std::vector<int>& Problem::implemented_fids() {
  static const std::vector<int> ids = {1, 2, 3, 6, 9, 10, 11, 16, 17, 22};
  return ids;
}

Problem::Problem(int fid, int iid, int dim) : fid_(fid), iid_(iid), dim_(dim) {
  const auto& ids = implemented_fids();
  if (std::find(ids.begin(), ids.end(), fid) == ids.end())
    throw SpecError("unknown function id " + std::to_string(fid));
  if (iid < 1) throw SpecError("instance id must be positive");
  if (dim < 2) throw SpecError("dimension must be at least 2");

  Rng rng(mix_seed({kInstanceSalt, static_cast<std::uint64_t>(fid),
                    static_cast<std::uint64_t>(iid),
                    static_cast<std::uint64_t>(dim)}));

  x_opt_.resize(dim);
  for (int i = 0; i < dim; ++i) x_opt_[i] = -4.0 + 8.0 * uniform_double(rng);

  // f_opt: Cauchy draw, rounded to two decimals and clamped to +-1000.
  {
    const double u = uniform_double(rng);
    const double cauchy = std::tan(M_PI * (u - 0.5));
    f_opt_ = std::clamp(std::round(100.0 * cauchy) / 100.0, -1000.0, 1000.0);
  }

  const bool needs_r = fid != 1 && fid != 2 && fid != 3;
  const bool needs_q = fid == 6 || fid == 17;
  r_ = needs_r ? random_rotation(dim, rng) : Eigen::MatrixXd::Identity(dim, dim);
  q_ = needs_q ? random_rotation(dim, rng) : Eigen::MatrixXd::Identity(dim, dim);

  if (fid == 22) {
    constexpr int kPeaks = 21;
    peak_centers_.resize(kPeaks);
    peak_scales_.resize(kPeaks);
    peak_weights_.resize(kPeaks);
    peak_centers_[0] = x_opt_;
    peak_weights_[0] = 10.0;
    for (int p = 1; p < kPeaks; ++p) {
      Eigen::VectorXd c(dim);
      for (int i = 0; i < dim; ++i) c[i] = -4.9 + 9.8 * uniform_double(rng);
      peak_centers_[p] = c;
      peak_weights_[p] = 1.1 + 8.0 * static_cast<double>(p - 1) / 19.0;
    }
    // Conditioning: alpha_1 = 1000 for the global peak, the others take
    // distinct values 1000^(2j/19) in seeded order, each with a permuted
    // exponent layout.
    std::vector<double> alphas;
    for (int j = 0; j < 20; ++j)
      alphas.push_back(std::pow(1000.0, 2.0 * j / 19.0));
    shuffle_in_place(alphas, rng);
    for (int p = 0; p < kPeaks; ++p) {
      const double alpha =
          p == 0 ? 1000.0 : alphas[static_cast<std::size_t>(p - 1)];
      std::vector<int> order(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
      shuffle_in_place(order, rng);
      Eigen::VectorXd scale(dim);
      for (int i = 0; i < dim; ++i) {
        const double expo = static_cast<double>(order[static_cast<std::size_t>(i)]) /
                            (static_cast<double>(dim) - 1.0);
        scale[i] = std::pow(alpha, expo) / std::sqrt(alpha);
      }
      peak_scales_[p] = scale;
    }
  }
}

double Problem::raw(const Eigen::VectorXd& x) const {
  const int d = dim_;
  const Eigen::VectorXd diff = x - x_opt_;
  switch (fid_) {
    case 1: {  // sphere
      return diff.squaredNorm();
    }
    case 2: {  // separable ellipsoid
      const Eigen::VectorXd z = t_osz_vec(diff);
      double s = 0.0;
      for (int i = 0; i < d; ++i)
        s += std::pow(10.0, 6.0 * i / (d - 1.0)) * z[i] * z[i];
      return s;
    }
    case 3: {  // Rastrigin
      const Eigen::VectorXd z =
          lambda_alpha(10.0, d).cwiseProduct(t_asy(t_osz_vec(diff), 0.2));
      double cos_sum = 0.0;
      for (int i = 0; i < d; ++i) cos_sum += std::cos(2.0 * M_PI * z[i]);
      return 10.0 * (d - cos_sum) + z.squaredNorm();
    }
    case 6: {  // attractive sector
      const Eigen::VectorXd z =
          q_ * lambda_alpha(10.0, d).cwiseProduct(r_ * diff).eval();
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        const double scale = z[i] * x_opt_[i] > 0.0 ? 100.0 : 1.0;
        s += scale * scale * z[i] * z[i];
      }
      return std::pow(t_osz(s), 0.9);
    }
    case 9: {  // rotated Rosenbrock
      const double gamma = std::max(1.0, std::sqrt(static_cast<double>(d)) / 8.0);
      Eigen::VectorXd z = gamma * (r_ * diff);
      z.array() += 1.0;
      double s = 0.0;
      for (int i = 0; i < d - 1; ++i) {
        const double a = z[i] * z[i] - z[i + 1];
        const double b = z[i] - 1.0;
        s += 100.0 * a * a + b * b;
      }
      return s;
    }
    case 10: {  // rotated ellipsoid
      const Eigen::VectorXd z = t_osz_vec(r_ * diff);
      double s = 0.0;
      for (int i = 0; i < d; ++i)
        s += std::pow(10.0, 6.0 * i / (d - 1.0)) * z[i] * z[i];
      return s;
    }
    case 11: {  // discus
      const Eigen::VectorXd z = t_osz_vec(r_ * diff);
      double s = 1e6 * z[0] * z[0];
      for (int i = 1; i < d; ++i) s += z[i] * z[i];
      return s;
    }
    case 16: {  // Weierstrass, band-limited to 12 octaves
      const Eigen::VectorXd z = t_osz_vec(r_ * diff);
      // sum_k (1/2)^k cos(2 pi 3^k (t + 1/2)) has minimum f0 at t = 0.
      double f0 = 0.0;
      {
        double ak = 1.0;
        for (int k = 0; k <= 11; ++k) {
          f0 += ak * std::cos(M_PI * std::pow(3.0, k));
          ak *= 0.5;
        }
      }
      double outer = 0.0;
      for (int i = 0; i < d; ++i) {
        double ak = 1.0, bk = 1.0;
        double w = 0.0;
        for (int k = 0; k <= 11; ++k) {
          w += ak * std::cos(2.0 * M_PI * bk * (z[i] + 0.5));
          ak *= 0.5;
          bk *= 3.0;
        }
        outer += w;
      }
      const double inner = outer / d - f0;
      return 10.0 * inner * inner * inner;
    }
    case 17: {  // Schaffers F7
      const Eigen::VectorXd z =
          lambda_alpha(10.0, d).cwiseProduct(q_ * t_asy(r_ * diff, 0.5)).eval();
      double s = 0.0;
      for (int i = 0; i < d - 1; ++i) {
        const double si = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
        const double sin_term = std::sin(50.0 * std::pow(si, 0.2));
        s += std::sqrt(si) * (1.0 + sin_term * sin_term);
      }
      s /= (d - 1.0);
      return s * s;
    }
    case 22: {  // Gallagher-style 21 peaks
      double best = 0.0;
      for (std::size_t p = 0; p < peak_centers_.size(); ++p) {
        const Eigen::VectorXd w = r_ * (x - peak_centers_[p]);
        const double quad = w.cwiseProduct(peak_scales_[p]).dot(w);
        best = std::max(best,
                        peak_weights_[p] * std::exp(-quad / (2.0 * d)));
      }
      const double t = t_osz(10.0 - best);
      return t * t;
    }
    default:
      throw SpecError("unknown function id");
  }
}

EvalResult Problem::evaluate(const Eigen::VectorXd& x) {
  if (x.size() != dim_) throw SpecError("evaluate: dimension mismatch");
  if (!x.allFinite()) throw SpecError("evaluate: non-finite input");
  ++evaluations_;
  const double g = raw(x);
  const double f = g + f_opt_;
  double precision = g;
  if (precision < 0.0) {
    if (precision < -1e-12)
      throw NumericError("evaluate: precision fell below the rounding margin");
    precision = 0.0;
  }
  return {f, precision};
}

}  // namespace ldcma
