#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ldcma/point_set.hpp"

namespace ldcma {

/// Direction-number initialisers in the Joe-Kuo text format
/// (`d s a m_i` rows), parsed from data/joe_kuo_d6_64.txt which is embedded
/// into the library at build time. Dimension 1 is the van der Corput base-2
/// dimension and needs no row.
class SobolTable {
 public:
  static const SobolTable& bundled();
  static SobolTable parse(std::string_view text);

  int max_dim() const { return static_cast<int>(rows_.size()) + 1; }

  /// 32 left-aligned direction integers per coordinate, Bratley-Fox
  /// recurrence v_l = (v_{l-s} >> s) xor selected lower-order v's.
  std::vector<std::array<std::uint32_t, 32>> direction_integers(int dim) const;

 private:
  struct Row {
    int degree;
    std::uint32_t poly;  // interior coefficients of the primitive polynomial
    std::vector<std::uint32_t> m;
  };
  std::vector<Row> rows_;  // rows_[j] is dimension j + 2
};

/// Endless Sobol stream over (0,1)^dim in Gray-code order. Index 0 (the
/// origin) is skipped: the first emitted point is sequence index 1.
class SobolSequence {
 public:
  explicit SobolSequence(int dim);

  void next(std::span<double> out);
  std::uint64_t index() const { return index_; }

  /// Point at an absolute sequence index >= 1, independent of stream state.
  static void point_at(std::uint64_t index,
                       std::span<const std::array<std::uint32_t, 32>> dirs,
                       std::span<double> out);

 private:
  std::vector<std::array<std::uint32_t, 32>> dirs_;
  std::vector<std::uint32_t> state_;
  std::uint64_t index_ = 0;
  int dim_;
};

/// The first 2^ceil(log2 n) Sobol points (sequence indices 1..2^m). The
/// returned size is the rounded-up power of two even when larger than n.
PointSet sobol_set(std::size_t n, int dim);

}  // namespace ldcma
