#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace ldcma {

struct EvalResult {
  double f = 0.0;
  double precision = 0.0;  // f - f_opt, clamped to 0 from below
};

/// A benchmark function instance: function id, seeded instance transforms
/// (translation x_opt, offset f_opt, rotations R and Q), and an evaluation
/// counter. All instance randomness derives from (fid, iid, dim).
///
/// Implemented ids (two per BBOB difficulty group):
///   1 sphere               2 separable ellipsoid
///   6 attractive sector    9 rotated Rosenbrock
///  10 rotated ellipsoid   11 discus
///   3 Rastrigin           16 Weierstrass (band-limited)
///  17 Schaffers F7        22 Gallagher-style 21 peaks
class Problem {
 public:
  Problem(int fid, int iid, int dim);

  EvalResult evaluate(const Eigen::VectorXd& x);

  int fid() const { return fid_; }
  int iid() const { return iid_; }
  int dim() const { return dim_; }
  const Eigen::VectorXd& x_opt() const { return x_opt_; }
  double f_opt() const { return f_opt_; }
  const Eigen::MatrixXd& rotation_r() const { return r_; }
  const Eigen::MatrixXd& rotation_q() const { return q_; }
  std::uint64_t evaluations() const { return evaluations_; }

  static const std::vector<int>& implemented_fids();

 private:
  double raw(const Eigen::VectorXd& x) const;

  int fid_, iid_, dim_;
  Eigen::VectorXd x_opt_;
  double f_opt_ = 0.0;
  Eigen::MatrixXd r_, q_;
  std::uint64_t evaluations_ = 0;

  // Gallagher peaks (fid 22 only).
  std::vector<Eigen::VectorXd> peak_centers_;
  std::vector<Eigen::VectorXd> peak_scales_;  // diagonal of C_i
  std::vector<double> peak_weights_;
};

inline Problem make_problem(int fid, int iid, int dim) {
  return Problem(fid, iid, dim);
}

}  // namespace ldcma
