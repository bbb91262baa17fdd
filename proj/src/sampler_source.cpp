#include "ldcma/sampler_source.hpp"

#include <numeric>
#include <vector>

#include "ldcma/errors.hpp"
#include "ldcma/lds.hpp"
#include "ldcma/rng.hpp"
#include "ldcma/sobol.hpp"

namespace ldcma {

namespace {

class CachedSource final : public SamplerSource {
 public:
  CachedSource(PointSet ps, std::uint64_t seed)
      : ps_(std::move(ps)), order_(ps_.size()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    Rng rng(mix_seed({0x70c0ffee0a11ca11ULL, seed}));
    shuffle_in_place(order_, rng);
  }

  int dim() const override { return ps_.dim(); }

  void next(std::span<double> out) override {
    const auto p = ps_.point(order_[cursor_]);
    std::copy(p.begin(), p.end(), out.begin());
    cursor_ = (cursor_ + 1) % order_.size();
  }

 private:
  PointSet ps_;
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;
};

class UniformSource final : public SamplerSource {
 public:
  UniformSource(int dim, std::uint64_t seed) : rng_(seed), dim_(dim) {}

  int dim() const override { return dim_; }

  void next(std::span<double> out) override {
    for (int k = 0; k < dim_; ++k)
      out[static_cast<std::size_t>(k)] = uniform_double(rng_);
  }

 private:
  Rng rng_;
  int dim_;
};

class HaltonSource final : public SamplerSource {
 public:
  HaltonSource(int dim, std::uint64_t seed, bool scrambled) : dim_(dim) {
    if (dim < 1 || dim > kMaxHaltonDim)
      throw SpecError("halton source: dim must be in [1, " +
                      std::to_string(kMaxHaltonDim) + "]");
    if (scrambled) {
      perms_.reserve(static_cast<std::size_t>(dim));
      for (int k = 0; k < dim; ++k)
        perms_.push_back(digit_permutation(halton_prime(k), seed));
    }
  }

  int dim() const override { return dim_; }

  void next(std::span<double> out) override {
    ++index_;
    for (int k = 0; k < dim_; ++k) {
      out[static_cast<std::size_t>(k)] =
          perms_.empty()
              ? radical_inverse(index_, halton_prime(k))
              : scrambled_radical_inverse(index_, halton_prime(k),
                                          perms_[static_cast<std::size_t>(k)]);
    }
  }

 private:
  std::vector<std::vector<std::uint16_t>> perms_;
  std::uint64_t index_ = 0;  // pre-increment: first emitted index is 1
  int dim_;
};

class SobolSource final : public SamplerSource {
 public:
  explicit SobolSource(int dim) : seq_(dim), dim_(dim) {}

  int dim() const override { return dim_; }

  void next(std::span<double> out) override { seq_.next(out); }

 private:
  SobolSequence seq_;
  int dim_;
};

}  // namespace

std::unique_ptr<SamplerSource> make_cached_source(PointSet ps,
                                                  std::uint64_t seed) {
  return std::make_unique<CachedSource>(std::move(ps), seed);
}

std::unique_ptr<SamplerSource> make_endless_source(Generator kind, int dim,
                                                   std::uint64_t seed,
                                                   bool scrambled_halton) {
  switch (kind) {
    case Generator::kUniform:
      return std::make_unique<UniformSource>(dim, seed);
    case Generator::kHalton:
      return std::make_unique<HaltonSource>(dim, seed, scrambled_halton);
    case Generator::kSobol:
      return std::make_unique<SobolSource>(dim);
    default:
      throw SpecError("endless source requires uniform, halton, or sobol");
  }
}

}  // namespace ldcma
