#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ldcma {

enum class Generator { kUniform, kHalton, kSobol, kOptimized, kImported };

std::string to_string(Generator g);
Generator generator_from_string(const std::string& s);

/// An ordered list of points in the half-open unit cube [0,1)^dim together
/// with provenance metadata. The unit of sampling and of discrepancy
/// measurement.
class PointSet {
 public:
  /// Validates every coordinate against [0,1) and the row shape.
  PointSet(int dim, Generator generator, std::uint64_t seed,
           std::vector<double> coords);

  int dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }
  Generator generator() const { return generator_; }
  std::uint64_t seed() const { return seed_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }
  double coord(std::size_t i, int k) const {
    return coords_[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(k)];
  }
  const std::vector<double>& raw() const { return coords_; }

  /// Same coordinates under a different provenance tag.
  PointSet retagged(Generator generator, std::uint64_t seed) const;

 private:
  int dim_;
  Generator generator_;
  std::uint64_t seed_;
  std::vector<double> coords_;  // row-major, size() * dim_ entries
};

/// Plain-text format: one point per line, space-separated coordinates with
/// full round-trip precision; `#` lines are comments; the first line carries
/// `# dim=<d> n=<k> generator=<tag> seed=<s>` metadata.
void save_point_set(const PointSet& ps, const std::string& path);

/// Loaded sets are tagged kImported with seed 0 regardless of metadata.
PointSet load_point_set(const std::string& path);

}  // namespace ldcma
