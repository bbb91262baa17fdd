#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "ldcma/point_set.hpp"

namespace ldcma {

/// A stream of unit-cube points consumed lambda at a time by the optimizer.
/// Single-consumer: a source may be moved between threads but must not be
/// drawn from concurrently.
class SamplerSource {
 public:
  virtual ~SamplerSource() = default;
  virtual int dim() const = 0;
  /// Fills out with the next point's dim() coordinates, all in [0,1).
  virtual void next(std::span<double> out) = 0;
};

/// Wraps a fixed point set as a cycling cache: the index order is permuted
/// once from `seed`, then draws walk the permuted order with the cursor
/// wrapping modulo the set size. No re-permutation at wrap, so draw i and
/// draw i+k are identical.
std::unique_ptr<SamplerSource> make_cached_source(PointSet ps,
                                                  std::uint64_t seed);

/// An endless generator stream. Halton and Sobol streams advance one
/// sequence index per draw starting at index 1 and never reset; kUniform is
/// a seeded PRNG stream. `scrambled_halton` selects scrambling for kHalton
/// and is ignored otherwise.
std::unique_ptr<SamplerSource> make_endless_source(Generator kind, int dim,
                                                   std::uint64_t seed,
                                                   bool scrambled_halton = true);

}  // namespace ldcma
