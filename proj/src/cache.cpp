#include "mfgap/cache.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mfgap/invariants.h"

namespace mfgap::cache {

namespace fs = std::filesystem;

void write_basis(const SpaceBasis& b, const fs::path& file) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "MFBASIS v1 " << b.level << ' ' << b.weight << ' ' << b.precision << ' ' << b.dim() << '\n';
    for (const auto& row : b.rows) {
      for (size_t n = 0; n < row.size(); ++n) out << (n ? " " : "") << row[n].get_str();
      out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + file.string());
  }
  nlohmann::json meta = {{"engineVersion", kEngineVersion},
                         {"sturmBound", invariants::sturm_bound(Level(b.level), Weight(b.weight))},
                         {"pivots", b.pivots}};
  std::ofstream side(file.string() + ".json");
  side << meta.dump(2) << '\n';
}

SpaceBasis read_basis(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty cache file " + file.string());
  std::istringstream head(line);
  std::string magic, version;
  SpaceBasis b;
  size_t dim = 0;
  if (!(head >> magic >> version >> b.level >> b.weight >> b.precision >> dim) || magic != "MFBASIS" ||
      version != "v1")
    throw std::runtime_error("bad cache header in " + file.string());
  for (size_t r = 0; r < dim; ++r) {
    if (!std::getline(in, line)) throw std::runtime_error("cache file has fewer rows than its header states");
    std::istringstream body(line);
    std::vector<mpz_class> row;
    std::string tok;
    while (body >> tok) row.emplace_back(tok);
    if (static_cast<int64_t>(row.size()) != b.precision)
      throw std::runtime_error("cache row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                               " coefficients, header states " + std::to_string(b.precision));
    int64_t pivot = 0;
    for (size_t n = 0; n < row.size() && pivot == 0; ++n)
      if (sgn(row[n]) != 0) pivot = static_cast<int64_t>(n) + 1;
    if (pivot == 0 || (!b.pivots.empty() && pivot <= b.pivots.back()))
      throw std::runtime_error("cache rows are not in echelon form");
    b.pivots.push_back(pivot);
    b.rows.push_back(std::move(row));
  }
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw std::runtime_error("cache file has more rows than its header states");
  std::ifstream side(file.string() + ".json");
  if (side) {
    auto meta = nlohmann::json::parse(side);
    if (meta.at("pivots").get<std::vector<int64_t>>() != b.pivots)
      throw std::runtime_error("cache sidecar pivots disagree with " + file.string());
  }
  return b;
}

std::string file_name(int64_t level, int64_t weight, int64_t precision) {
  return "S_" + std::to_string(level) + "_" + std::to_string(weight) + "_" + std::to_string(precision) + ".mfb";
}

std::optional<fs::path> resolve_dir(const std::string& cli_dir) {
  const char* env = std::getenv("MFCACHE");
  if (env && *env) return fs::path(env);
  if (!cli_dir.empty()) return fs::path(cli_dir);
  return std::nullopt;
}

SpaceBasis load_or_build(int64_t level, int64_t weight, int64_t precision, const std::optional<fs::path>& dir,
                         const msengine::BuildOptions& opts, bool* from_cache) {
  if (from_cache) *from_cache = false;
  if (dir && fs::is_directory(*dir)) {
    const std::string prefix = "S_" + std::to_string(level) + "_" + std::to_string(weight) + "_";
    std::optional<std::pair<int64_t, fs::path>> best;
    for (const auto& e : fs::directory_iterator(*dir)) {
      const std::string name = e.path().filename().string();
      if (name.rfind(prefix, 0) != 0 || e.path().extension() != ".mfb") continue;
      int64_t b = 0;
      try {
        b = std::stoll(name.substr(prefix.size()));
      } catch (const std::exception&) {
        continue;
      }
      if (b >= precision && (!best || b < best->first)) best = {b, e.path()};
    }
    if (best) {
      SpaceBasis cached = read_basis(best->second);
      if (from_cache) *from_cache = true;
      return cached.precision == precision ? cached : cached.truncated(precision);
    }
  }
  SpaceBasis b = msengine::qexpansion_basis(level, weight, precision, opts);
  if (dir) write_basis(b, *dir / file_name(level, weight, precision));
  return b;
}

}  // namespace mfgap::cache
