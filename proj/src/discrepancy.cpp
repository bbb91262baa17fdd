#include "ldcma/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ldcma/errors.hpp"
#include "ldcma/rng.hpp"

namespace ldcma {

std::string to_string(DiscrepancyMethod m) {
  switch (m) {
    case DiscrepancyMethod::kWarnock: return "WARNOCK";
    case DiscrepancyMethod::kMonteCarlo: return "MONTECARLO";
    case DiscrepancyMethod::kLinfExact: return "LINF_EXACT";
  }
  return "unknown";
}

double l2_star(const PointSet& ps) {
  const std::size_t n = ps.size();
  const int d = ps.dim();
  if (n == 0) throw SpecError("l2_star: empty point set");

  double single = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = ps.point(i);
    double prod = 1.0;
    for (int k = 0; k < d; ++k) {
      const double x = p[static_cast<std::size_t>(k)];
      prod *= (1.0 - x * x) * 0.5;
    }
    single += prod;
  }

  double pair_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = ps.point(i);
    // diagonal term
    double diag = 1.0;
    for (int k = 0; k < d; ++k) diag *= 1.0 - pi[static_cast<std::size_t>(k)];
    pair_sum += diag;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto pj = ps.point(j);
      double prod = 1.0;
      for (int k = 0; k < d; ++k)
        prod *= 1.0 - std::max(pi[static_cast<std::size_t>(k)],
                               pj[static_cast<std::size_t>(k)]);
      pair_sum += 2.0 * prod;
    }
  }

  const double nd = static_cast<double>(n);
  const double sq = std::pow(3.0, -d) - 2.0 / nd * single + pair_sum / (nd * nd);
  return std::sqrt(std::max(sq, 0.0));
}

McEstimate l2_star_mc(const PointSet& ps, std::size_t samples,
                      std::uint64_t seed) {
  if (ps.size() == 0) throw SpecError("l2_star_mc: empty point set");
  if (samples < 100) throw SpecError("l2_star_mc: need at least 100 samples");

  const std::size_t n = ps.size();
  const int d = ps.dim();
  const double inv_n = 1.0 / static_cast<double>(n);
  Rng rng(seed);
  std::vector<double> q(static_cast<std::size_t>(d));

  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    double vol = 1.0;
    for (int k = 0; k < d; ++k) {
      q[static_cast<std::size_t>(k)] = uniform_double(rng);
      vol *= q[static_cast<std::size_t>(k)];
    }
    std::size_t inside = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = ps.point(i);
      bool in = true;
      for (int k = 0; k < d; ++k) {
        if (p[static_cast<std::size_t>(k)] >= q[static_cast<std::size_t>(k)]) {
          in = false;
          break;
        }
      }
      inside += in;
    }
    const double local = static_cast<double>(inside) * inv_n - vol;
    const double sq = local * local;
    sum += sq;
    sum_sq += sq * sq;
  }

  const double m = static_cast<double>(samples);
  const double mean = sum / m;
  const double var = std::max(0.0, (sum_sq - sum * sum / m) / (m - 1.0));
  const double se_mean = std::sqrt(var / m);
  const double estimate = std::sqrt(std::max(mean, 0.0));
  // Delta method for sqrt; degenerate when the mean itself vanishes.
  const double se = estimate > 0.0 ? se_mean / (2.0 * estimate) : se_mean;
  return {estimate, se};
}

double linf_star_exact(const PointSet& ps) {
  const std::size_t n = ps.size();
  const int d = ps.dim();
  if (n == 0) throw SpecError("linf_star_exact: empty point set");

  const double work = std::pow(static_cast<double>(n), d) * static_cast<double>(n);
  if (work > 1e9)
    throw SpecError("linf_star_exact: n^d * n exceeds the 1e9 enumeration guard");

  // Per-axis critical values: the point coordinates and the value 1.
  std::vector<std::vector<double>> grid(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    auto& g = grid[static_cast<std::size_t>(k)];
    g.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) g.push_back(ps.coord(i, k));
    g.push_back(1.0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> q(static_cast<std::size_t>(d));
  double sup = 0.0;
  while (true) {
    double vol = 1.0;
    for (int k = 0; k < d; ++k) {
      q[static_cast<std::size_t>(k)] =
          grid[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
      vol *= q[static_cast<std::size_t>(k)];
    }
    std::size_t open = 0, closed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = ps.point(i);
      bool strict = true, weak = true;
      for (int k = 0; k < d; ++k) {
        const double x = p[static_cast<std::size_t>(k)];
        const double qq = q[static_cast<std::size_t>(k)];
        if (x >= qq) strict = false;
        if (x > qq) {
          weak = false;
          break;
        }
      }
      open += strict;
      closed += weak;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    sup = std::max(sup, std::abs(static_cast<double>(open) * inv_n - vol));
    sup = std::max(sup, std::abs(static_cast<double>(closed) * inv_n - vol));

    int axis = 0;
    while (axis < d) {
      auto& i = idx[static_cast<std::size_t>(axis)];
      if (++i < grid[static_cast<std::size_t>(axis)].size()) break;
      i = 0;
      ++axis;
    }
    if (axis == d) break;
  }
  return sup;
}

namespace {

// Swap-move bookkeeping for the Threshold Accepting search over k-subsets.
// b(i,j) = prod_k (1 - max(x_ik, x_jk)) over the whole base set; row sums
// against the current subset make each move evaluation O(1).
class SubsetEnergy {
 public:
  SubsetEnergy(const PointSet& base, std::vector<std::size_t> subset)
      : base_(base),
        n_(base.size()),
        k_(subset.size()),
        selected_(subset),
        is_selected_(n_, 0),
        b_(n_ * n_),
        a_(n_),
        rowsum_(n_, 0.0) {
    const int d = base.dim();
    for (std::size_t i = 0; i < n_; ++i) {
      const auto pi = base.point(i);
      double prod = 1.0;
      for (int kk = 0; kk < d; ++kk) {
        const double x = pi[static_cast<std::size_t>(kk)];
        prod *= (1.0 - x * x) * 0.5;
      }
      a_[i] = prod;
      for (std::size_t j = i; j < n_; ++j) {
        const auto pj = base.point(j);
        double bij = 1.0;
        for (int kk = 0; kk < d; ++kk)
          bij *= 1.0 - std::max(pi[static_cast<std::size_t>(kk)],
                                pj[static_cast<std::size_t>(kk)]);
        b_[i * n_ + j] = bij;
        b_[j * n_ + i] = bij;
      }
    }
    three_pow_ = std::pow(3.0, -d);
    reset(std::move(subset));
  }

  void reset(std::vector<std::size_t> subset) {
    selected_ = std::move(subset);
    std::fill(is_selected_.begin(), is_selected_.end(), 0);
    for (auto s : selected_) is_selected_[s] = 1;
    std::fill(rowsum_.begin(), rowsum_.end(), 0.0);
    sum_a_ = 0.0;
    for (auto s : selected_) sum_a_ += a_[s];
    for (std::size_t i = 0; i < n_; ++i) {
      double r = 0.0;
      for (auto s : selected_) r += b_[i * n_ + s];
      rowsum_[i] = r;
    }
    sum_b_ = 0.0;
    for (auto s : selected_) sum_b_ += rowsum_[s];
  }

  double value() const {
    const double kd = static_cast<double>(k_);
    const double sq = three_pow_ - 2.0 / kd * sum_a_ + sum_b_ / (kd * kd);
    return std::sqrt(std::max(sq, 0.0));
  }

  // Value after swapping out `p` (selected) for `q` (unselected).
  double value_after_swap(std::size_t p, std::size_t q) const {
    const double kd = static_cast<double>(k_);
    const double new_a = sum_a_ - a_[p] + a_[q];
    const double new_b = sum_b_ - 2.0 * rowsum_[p] + b_[p * n_ + p] +
                         2.0 * (rowsum_[q] - b_[q * n_ + p]) + b_[q * n_ + q];
    const double sq = three_pow_ - 2.0 / kd * new_a + new_b / (kd * kd);
    return std::sqrt(std::max(sq, 0.0));
  }

  void apply_swap(std::size_t p, std::size_t q) {
    sum_a_ += a_[q] - a_[p];
    sum_b_ += -2.0 * rowsum_[p] + b_[p * n_ + p] +
              2.0 * (rowsum_[q] - b_[q * n_ + p]) + b_[q * n_ + q];
    for (std::size_t i = 0; i < n_; ++i)
      rowsum_[i] += b_[i * n_ + q] - b_[i * n_ + p];
    is_selected_[p] = 0;
    is_selected_[q] = 1;
    *std::find(selected_.begin(), selected_.end(), p) = q;
  }

  const std::vector<std::size_t>& selected() const { return selected_; }

 private:
  const PointSet& base_;
  std::size_t n_, k_;
  std::vector<std::size_t> selected_;
  std::vector<char> is_selected_;
  std::vector<double> b_, a_, rowsum_;
  double three_pow_ = 0.0, sum_a_ = 0.0, sum_b_ = 0.0;
};

std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  shuffle_in_place(all, rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

PointSet gather(const PointSet& base, const std::vector<std::size_t>& subset,
                std::uint64_t seed) {
  std::vector<double> coords;
  coords.reserve(subset.size() * static_cast<std::size_t>(base.dim()));
  for (auto s : subset) {
    const auto p = base.point(s);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(base.dim(), Generator::kOptimized, seed, std::move(coords));
}

}  // namespace

TaResult ta_subset_search(const PointSet& base, std::size_t k,
                          std::size_t iters, std::uint64_t seed) {
  const std::size_t n = base.size();
  if (k == 0) throw SpecError("ta_subset: k must be positive");
  if (k > n) throw SpecError("ta_subset: k exceeds the base set size");
  if (iters == 0) throw SpecError("ta_subset: iters must be positive");
  if (n > 4096) throw SpecError("ta_subset: base sets above 4096 points unsupported");

  if (k == n) {
    PointSet whole = base.retagged(Generator::kOptimized, seed);
    const double v = l2_star(whole);
    return {std::move(whole), v, v, 0.0};
  }

  Rng rng(mix_seed({0x7a5e1dca11beefULL, seed}));

  // Start from the best of 10 random k-subsets.
  std::vector<std::size_t> start;
  double start_value = 0.0;
  SubsetEnergy energy(base, random_subset(n, k, rng));
  start = energy.selected();
  start_value = energy.value();
  for (int t = 1; t < 10; ++t) {
    auto cand = random_subset(n, k, rng);
    energy.reset(cand);
    const double v = energy.value();
    if (v < start_value) {
      start_value = v;
      start = cand;
    }
  }
  energy.reset(start);

  const auto pick_move = [&](std::size_t& p, std::size_t& q) {
    const auto& sel = energy.selected();
    p = sel[static_cast<std::size_t>(uniform_below(rng, sel.size()))];
    do {
      q = static_cast<std::size_t>(uniform_below(rng, n));
    } while (std::find(sel.begin(), sel.end(), q) != sel.end());
  };

  // Threshold calibration: median |delta| over 100 random swaps.
  std::vector<double> deltas;
  deltas.reserve(100);
  const double v0 = energy.value();
  for (int t = 0; t < 100; ++t) {
    std::size_t p, q;
    pick_move(p, q);
    deltas.push_back(std::abs(energy.value_after_swap(p, q) - v0));
  }
  std::nth_element(deltas.begin(), deltas.begin() + 50, deltas.end());
  const double t0 = deltas[50];

  double current = v0;
  double best_value = current;
  std::vector<std::size_t> best = energy.selected();
  for (std::size_t t = 0; t < iters; ++t) {
    const double threshold =
        t0 * (1.0 - static_cast<double>(t) / static_cast<double>(iters));
    std::size_t p, q;
    pick_move(p, q);
    const double cand = energy.value_after_swap(p, q);
    if (cand - current <= threshold) {
      energy.apply_swap(p, q);
      current = cand;
      if (current < best_value) {
        best_value = current;
        best = energy.selected();
      }
    }
  }

  TaResult result{gather(base, best, seed), start_value, best_value, t0};
  return result;
}

PointSet ta_subset(const PointSet& base, std::size_t k, std::size_t iters,
                   std::uint64_t seed) {
  return ta_subset_search(base, k, iters, seed).subset;
}

}  // namespace ldcma
