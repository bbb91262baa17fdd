#include "ldcma/lds.hpp"

#include <numeric>

#include "ldcma/errors.hpp"
#include "ldcma/rng.hpp"

namespace ldcma {

namespace {

constexpr int kPrimes[kMaxHaltonDim] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
    43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
    173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
    241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

constexpr std::uint64_t kScrambleSalt = 0x5c7a1e4b9d03f268ULL;

}  // namespace

int halton_prime(int k) {
  if (k < 0 || k >= kMaxHaltonDim)
    throw SpecError("halton: coordinate index out of range");
  return kPrimes[k];
}

double radical_inverse(std::uint64_t index, int base) {
  if (base < 2) throw SpecError("radical_inverse: base must be >= 2");
  const double inv_base = 1.0 / base;
  double value = 0.0;
  double scale = inv_base;
  while (index > 0) {
    value += static_cast<double>(index % static_cast<std::uint64_t>(base)) * scale;
    index /= static_cast<std::uint64_t>(base);
    scale *= inv_base;
  }
  return value;
}

std::vector<std::uint16_t> digit_permutation(int base, std::uint64_t seed) {
  if (base < 2) throw SpecError("digit_permutation: base must be >= 2");
  std::vector<std::uint16_t> perm(static_cast<std::size_t>(base));
  std::iota(perm.begin(), perm.end(), std::uint16_t{0});
  // Shuffle only 1..base-1; zero stays fixed so trailing zero digits keep
  // the radical inverse finite.
  std::vector<std::uint16_t> tail(perm.begin() + 1, perm.end());
  Rng rng(mix_seed({kScrambleSalt, seed, static_cast<std::uint64_t>(base)}));
  shuffle_in_place(tail, rng);
  std::copy(tail.begin(), tail.end(), perm.begin() + 1);
  return perm;
}

double scrambled_radical_inverse(std::uint64_t index, int base,
                                 std::span<const std::uint16_t> perm) {
  if (base < 2) throw SpecError("scrambled_radical_inverse: base must be >= 2");
  const double inv_base = 1.0 / base;
  double value = 0.0;
  double scale = inv_base;
  int digit_pos = 0;
  while (index > 0) {
    const auto digit = static_cast<std::size_t>(index % static_cast<std::uint64_t>(base));
    const double mapped = digit_pos < 32
                              ? static_cast<double>(perm[digit])
                              : static_cast<double>(digit);
    value += mapped * scale;
    index /= static_cast<std::uint64_t>(base);
    scale *= inv_base;
    ++digit_pos;
  }
  return value;
}

PointSet halton_set(std::size_t n, int dim, std::uint64_t seed, bool scrambled) {
  if (n == 0) throw SpecError("halton_set: n must be positive");
  if (dim < 1 || dim > kMaxHaltonDim)
    throw SpecError("halton_set: dim must be in [1, " +
                    std::to_string(kMaxHaltonDim) + "]");

  std::vector<std::vector<std::uint16_t>> perms;
  if (scrambled) {
    perms.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k)
      perms.push_back(digit_permutation(kPrimes[k], seed));
  }

  std::vector<double> coords(n * static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t index = i + 1;  // index 0 is the origin; skip it
    for (int k = 0; k < dim; ++k) {
      coords[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)] =
          scrambled ? scrambled_radical_inverse(index, kPrimes[k],
                                                perms[static_cast<std::size_t>(k)])
                    : radical_inverse(index, kPrimes[k]);
    }
  }
  return PointSet(dim, Generator::kHalton, scrambled ? seed : 0,
                  std::move(coords));
}

PointSet uniform_set(std::size_t n, int dim, std::uint64_t seed) {
  if (n == 0) throw SpecError("uniform_set: n must be positive");
  if (dim < 1) throw SpecError("uniform_set: dim must be positive");
  Rng rng(seed);
  std::vector<double> coords(n * static_cast<std::size_t>(dim));
  for (auto& c : coords) c = uniform_double(rng);
  return PointSet(dim, Generator::kUniform, seed, std::move(coords));
}

}  // namespace ldcma
