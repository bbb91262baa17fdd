#include "ldcma/point_set.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ldcma/errors.hpp"

namespace ldcma {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::kUniform: return "uniform";
    case Generator::kHalton: return "halton";
    case Generator::kSobol: return "sobol";
    case Generator::kOptimized: return "optimized";
    case Generator::kImported: return "imported";
  }
  return "unknown";
}

Generator generator_from_string(const std::string& s) {
  if (s == "uniform") return Generator::kUniform;
  if (s == "halton") return Generator::kHalton;
  if (s == "sobol") return Generator::kSobol;
  if (s == "optimized") return Generator::kOptimized;
  if (s == "imported") return Generator::kImported;
  throw SpecError("unknown generator tag: " + s);
}

PointSet::PointSet(int dim, Generator generator, std::uint64_t seed,
                   std::vector<double> coords)
    : dim_(dim), generator_(generator), seed_(seed), coords_(std::move(coords)) {
  if (dim_ < 1) throw SpecError("PointSet: dim must be positive");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
    throw SpecError("PointSet: coordinate count must be a positive multiple of dim");
  for (double c : coords_) {
    if (!(c >= 0.0 && c < 1.0))
      throw SpecError("PointSet: coordinate " + std::to_string(c) +
                      " outside [0,1)");
  }
}

PointSet PointSet::retagged(Generator generator, std::uint64_t seed) const {
  PointSet copy = *this;
  copy.generator_ = generator;
  copy.seed_ = seed;
  return copy;
}

namespace {

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_point_set(const PointSet& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot open for writing: " + path);
  out << "# dim=" << ps.dim() << " n=" << ps.size()
      << " generator=" << to_string(ps.generator()) << " seed=" << ps.seed()
      << "\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto p = ps.point(i);
    for (int k = 0; k < ps.dim(); ++k) {
      if (k) out << ' ';
      out << format_coord(p[static_cast<std::size_t>(k)]);
    }
    out << '\n';
  }
  if (!out) throw SpecError("write failed: " + path);
}

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open point-set file: " + path);

  std::vector<double> coords;
  int dim = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<double> vals;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw SpecError(path + ":" + std::to_string(lineno) +
                        ": cannot parse coordinate '" + tok + "'");
      }
      if (used != tok.size())
        throw SpecError(path + ":" + std::to_string(lineno) +
                        ": cannot parse coordinate '" + tok + "'");
      if (!(v >= 0.0 && v < 1.0))
        throw SpecError(path + ":" + std::to_string(lineno) + ": coordinate " +
                        tok + " outside [0,1)");
      vals.push_back(v);
    }
    if (vals.empty())
      throw SpecError(path + ":" + std::to_string(lineno) + ": empty point row");
    if (dim < 0) {
      dim = static_cast<int>(vals.size());
    } else if (static_cast<int>(vals.size()) != dim) {
      throw SpecError(path + ":" + std::to_string(lineno) +
                      ": row has " + std::to_string(vals.size()) +
                      " coordinates, expected " + std::to_string(dim));
    }
    coords.insert(coords.end(), vals.begin(), vals.end());
  }
  if (dim < 0) throw SpecError(path + ": no points found");
  return PointSet(dim, Generator::kImported, 0, std::move(coords));
}

}  // namespace ldcma
