#include "ldcma/sobol.hpp"

#include <bit>
#include <sstream>

#include "ldcma/errors.hpp"

namespace ldcma {

extern const char* kSobolTableText;  // generated from data/joe_kuo_d6_64.txt

const SobolTable& SobolTable::bundled() {
  static const SobolTable table = SobolTable::parse(kSobolTableText);
  return table;
}

SobolTable SobolTable::parse(std::string_view text) {
  SobolTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int expected_dim = 2;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'd') continue;
    std::istringstream row(line);
    int d = 0, s = 0;
    std::uint32_t a = 0;
    if (!(row >> d >> s >> a))
      throw SpecError("sobol table: malformed row: " + line);
    if (d != expected_dim)
      throw SpecError("sobol table: expected dimension " +
                      std::to_string(expected_dim) + ", got " + line);
    Row r;
    r.degree = s;
    r.poly = a;
    std::uint32_t m;
    while (row >> m) r.m.push_back(m);
    if (static_cast<int>(r.m.size()) != s)
      throw SpecError("sobol table: dimension " + std::to_string(d) + " has " +
                      std::to_string(r.m.size()) + " initialisers, expected " +
                      std::to_string(s));
    for (int j = 0; j < s; ++j) {
      if (r.m[static_cast<std::size_t>(j)] % 2 == 0 ||
          r.m[static_cast<std::size_t>(j)] >= (1u << (j + 1)))
        throw SpecError("sobol table: bad initialiser in dimension " +
                        std::to_string(d));
    }
    table.rows_.push_back(std::move(r));
    ++expected_dim;
  }
  if (table.rows_.empty()) throw SpecError("sobol table: empty");
  return table;
}

std::vector<std::array<std::uint32_t, 32>> SobolTable::direction_integers(
    int dim) const {
  if (dim < 1) throw SpecError("sobol: dim must be positive");
  if (dim > max_dim())
    throw SpecError("sobol: dim " + std::to_string(dim) +
                    " exceeds the bundled direction-number table (max " +
                    std::to_string(max_dim()) + ")");
  std::vector<std::array<std::uint32_t, 32>> v(static_cast<std::size_t>(dim));

  // First dimension: v_j = 2^(31-j), the van der Corput recursion.
  for (int j = 0; j < 32; ++j) v[0][static_cast<std::size_t>(j)] = 1u << (31 - j);

  for (int k = 1; k < dim; ++k) {
    const Row& row = rows_[static_cast<std::size_t>(k - 1)];
    const int s = row.degree;
    auto& vk = v[static_cast<std::size_t>(k)];
    for (int j = 0; j < s && j < 32; ++j)
      vk[static_cast<std::size_t>(j)] = row.m[static_cast<std::size_t>(j)]
                                        << (31 - j);
    for (int l = s; l < 32; ++l) {
      std::uint32_t n = vk[static_cast<std::size_t>(l - s)] >>
                        static_cast<unsigned>(s);
      n ^= vk[static_cast<std::size_t>(l - s)];
      for (int j = 1; j < s; ++j) {
        if ((row.poly >> (s - j - 1)) & 1u)
          n ^= vk[static_cast<std::size_t>(l - j)];
      }
      vk[static_cast<std::size_t>(l)] = n;
    }
  }
  return v;
}

SobolSequence::SobolSequence(int dim)
    : dirs_(SobolTable::bundled().direction_integers(dim)),
      state_(static_cast<std::size_t>(dim), 0),
      dim_(dim) {}

void SobolSequence::next(std::span<double> out) {
  if (index_ >= (1ull << 32) - 1)
    throw NumericError("sobol: sequence index exhausted the 32-bit state");
  // Antonov-Saleev: advancing from index i flips the direction integer at
  // the position of the lowest zero bit of i.
  const int c = std::countr_one(index_);
  for (int k = 0; k < dim_; ++k)
    state_[static_cast<std::size_t>(k)] ^=
        dirs_[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
  ++index_;
  for (int k = 0; k < dim_; ++k)
    out[static_cast<std::size_t>(k)] =
        static_cast<double>(state_[static_cast<std::size_t>(k)]) * 0x1.0p-32;
}

void SobolSequence::point_at(std::uint64_t index,
                             std::span<const std::array<std::uint32_t, 32>> dirs,
                             std::span<double> out) {
  const std::uint64_t gray = index ^ (index >> 1);
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    std::uint32_t x = 0;
    for (int j = 0; j < 32; ++j)
      if ((gray >> j) & 1ull) x ^= dirs[k][static_cast<std::size_t>(j)];
    out[k] = static_cast<double>(x) * 0x1.0p-32;
  }
}

PointSet sobol_set(std::size_t n, int dim) {
  if (n == 0) throw SpecError("sobol_set: n must be positive");
  if (n > (1ull << 31)) throw SpecError("sobol_set: n too large");
  std::size_t size = 1;
  while (size < n) size <<= 1;

  SobolSequence seq(dim);
  std::vector<double> coords(size * static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < size; ++i)
    seq.next({coords.data() + i * static_cast<std::size_t>(dim),
              static_cast<std::size_t>(dim)});
  return PointSet(dim, Generator::kSobol, 0, std::move(coords));
}

}  // namespace ldcma
