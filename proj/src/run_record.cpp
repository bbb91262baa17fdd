#include "ldcma/run_record.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ldcma/errors.hpp"

namespace ldcma {

double RunRecord::best_precision_at(std::uint64_t eval) const {
  if (checkpoints.empty() || eval < checkpoints.front().first)
    return std::numeric_limits<double>::infinity();
  auto it = std::upper_bound(
      checkpoints.begin(), checkpoints.end(), eval,
      [](std::uint64_t e, const auto& cp) { return e < cp.first; });
  return std::prev(it)->second;
}

void RunRecord::summarize_batches() {
  generations = batch_hashes.size();
  if (batch_hashes.empty()) {
    batch_first_hash = batch_distinct = batch_period = 0;
    return;
  }
  batch_first_hash = batch_hashes.front();
  batch_distinct =
      std::set<std::uint64_t>(batch_hashes.begin(), batch_hashes.end()).size();
  batch_period = 0;
  for (std::uint64_t p = 1; p < batch_hashes.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < batch_hashes.size(); ++i) {
      if (batch_hashes[i] != batch_hashes[i + p]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      batch_period = p;
      break;
    }
  }
}

std::uint64_t next_checkpoint(std::uint64_t eval) {
  if (eval < 100) return eval + 1;
  const auto grown =
      static_cast<std::uint64_t>(std::llround(static_cast<double>(eval) * 1.01));
  return std::max(eval + 1, grown);
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_run_record(const RunRecord& rec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot open for writing: " + path);
  out << "# run-record v1\n";
  out << "fid = " << rec.fid << "\n";
  out << "iid = " << rec.iid << "\n";
  out << "dim = " << rec.dim << "\n";
  out << "sampler = " << rec.sampler_kind << "\n";
  out << "k = " << (rec.cache_k == 0 ? std::string("inf")
                                     : std::to_string(rec.cache_k))
      << "\n";
  out << "lambda = " << rec.lambda << "\n";
  out << "seed = " << rec.seed << "\n";
  out << "budget = " << rec.budget << "\n";
  out << "evals_used = " << rec.evals_used << "\n";
  out << "generations = " << rec.generations << "\n";
  out << "final_precision = " << fmt(rec.final_precision) << "\n";
  if (!std::isnan(rec.set_l2)) out << "set_l2 = " << fmt(rec.set_l2) << "\n";
  char hexbuf[20];
  std::snprintf(hexbuf, sizeof(hexbuf), "%016llx",
                static_cast<unsigned long long>(rec.batch_first_hash));
  out << "batch_first_hash = " << hexbuf << "\n";
  out << "batch_distinct = " << rec.batch_distinct << "\n";
  out << "batch_period = " << rec.batch_period << "\n";
  out << "checkpoints = " << rec.checkpoints.size() << "\n";
  for (const auto& [eval, prec] : rec.checkpoints)
    out << eval << ' ' << fmt(prec) << "\n";
  if (!out) throw SpecError("write failed: " + path);
}

RunRecord load_run_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open run record: " + path);
  RunRecord rec;
  std::string line;
  std::size_t expected_checkpoints = 0;
  bool in_checkpoints = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!in_checkpoints) {
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw SpecError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      try {
        if (key == "fid") rec.fid = std::stoi(value);
        else if (key == "iid") rec.iid = std::stoi(value);
        else if (key == "dim") rec.dim = std::stoi(value);
        else if (key == "sampler") rec.sampler_kind = value;
        else if (key == "k") rec.cache_k = value == "inf" ? 0 : std::stoull(value);
        else if (key == "lambda") rec.lambda = std::stoi(value);
        else if (key == "seed") rec.seed = std::stoull(value);
        else if (key == "budget") rec.budget = std::stoull(value);
        else if (key == "evals_used") rec.evals_used = std::stoull(value);
        else if (key == "generations") rec.generations = std::stoull(value);
        else if (key == "final_precision") rec.final_precision = std::stod(value);
        else if (key == "set_l2") rec.set_l2 = std::stod(value);
        else if (key == "batch_first_hash")
          rec.batch_first_hash = std::stoull(value, nullptr, 16);
        else if (key == "batch_distinct") rec.batch_distinct = std::stoull(value);
        else if (key == "batch_period") rec.batch_period = std::stoull(value);
        else if (key == "checkpoints") {
          expected_checkpoints = std::stoull(value);
          in_checkpoints = true;
        } else {
          throw SpecError(path + ":" + std::to_string(lineno) +
                          ": unknown key '" + key + "'");
        }
      } catch (const SpecError&) {
        throw;
      } catch (const std::exception&) {
        throw SpecError(path + ":" + std::to_string(lineno) +
                        ": cannot parse value for '" + key + "'");
      }
    } else {
      std::istringstream row(line);
      std::uint64_t eval;
      double prec;
      if (!(row >> eval >> prec))
        throw SpecError(path + ":" + std::to_string(lineno) +
                        ": malformed checkpoint row");
      rec.checkpoints.emplace_back(eval, prec);
    }
  }
  if (rec.checkpoints.size() != expected_checkpoints)
    throw SpecError(path + ": checkpoint count mismatch");
  return rec;
}

}  // namespace ldcma
