#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ldcma/point_set.hpp"

namespace ldcma {

inline constexpr int kMaxHaltonDim = 64;

/// The k-th prime (0-based), k < 64; the Halton base of coordinate k.
int halton_prime(int k);

/// Base-b digit reversal of `index` placed after the radix point.
double radical_inverse(std::uint64_t index, int base);

/// Braaten-Weller style digit permutation for one base: a seeded random
/// permutation of {0,...,base-1} with pi(0) = 0 held fixed.
std::vector<std::uint16_t> digit_permutation(int base, std::uint64_t seed);

/// Radical inverse with `perm` applied to the first 32 digits.
double scrambled_radical_inverse(std::uint64_t index, int base,
                                 std::span<const std::uint16_t> perm);

/// Halton points at sequence indices 1..n (index 0 maps to the origin and is
/// skipped). Coordinate k uses the k-th prime base; scrambling derives one
/// digit permutation per base from `seed`.
PointSet halton_set(std::size_t n, int dim, std::uint64_t seed, bool scrambled);

/// n i.i.d. points from a seeded 64-bit PRNG.
PointSet uniform_set(std::size_t n, int dim, std::uint64_t seed);

}  // namespace ldcma
