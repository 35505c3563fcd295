#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "persymm/distribution.hpp"
#include "persymm/oracle.hpp"

// Persistent oracle result cache: one JSON record per line, append-only.
// Writes go through a temp file plus atomic rename so concurrent readers
// see either the old or the new file, never a torn one.

namespace persymm {

inline constexpr const char* kEngineVersion = "1";

struct CorruptCache : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::json dist_to_record(const RankDistribution& d, int nparams, double wall_time) {
  nlohmann::json rec;
  rec["shape"] = d.shape;
  auto& arr = rec["counts"] = nlohmann::json::array();
  for (const auto& c : d.counts) arr.push_back(c.str());
  rec["free_param_count"] = nparams;
  rec["engine_version"] = kEngineVersion;
  rec["wall_time"] = wall_time;
  return rec;
}

inline std::optional<RankDistribution> scan_cache(const std::filesystem::path& path,
                                                  const std::string& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  int lineno = 0;
  std::optional<RankDistribution> hit;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw CorruptCache(path.string() + ":" + std::to_string(lineno) +
                         ": unparseable record: " + e.what());
    }
    if (!rec.contains("shape") || !rec.contains("counts") || !rec.contains("free_param_count") ||
        !rec.contains("engine_version"))
      throw CorruptCache(path.string() + ":" + std::to_string(lineno) + ": missing field");
    if (rec["shape"] != key || rec["engine_version"] != kEngineVersion) continue;
    RankDistribution d;
    d.shape = key;
    d.source = DistSource::Oracle;
    for (const auto& s : rec["counts"]) d.counts.emplace_back(s.get<std::string>());
    try {
      d.check(rec["free_param_count"].get<int>());
    } catch (const std::logic_error& e) {
      throw CorruptCache(path.string() + ":" + std::to_string(lineno) +
                         ": checksum mismatch for cached record \"" + key + "\"");
    }
    hit = std::move(d);
  }
  return hit;
}

}  // namespace detail

inline RankDistribution cache_lookup_or_compute(const StackedShape& shape,
                                                const EnumerationBudget& budget,
                                                const std::filesystem::path& cache_path) {
  const std::string key = canonical_string(shape);
  if (auto hit = detail::scan_cache(cache_path, key)) return *hit;

  const auto t0 = std::chrono::steady_clock::now();
  RankDistribution d = enumerate_rank_distribution(shape, budget);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // re-read before rewriting: another record may have landed meanwhile
  std::ostringstream body;
  {
    std::ifstream in(cache_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) body << line << '\n';
  }
  body << detail::dist_to_record(d, shape.free_param_count(), wall).dump() << '\n';

  const auto tmp = cache_path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp);
    out << body.str();
  }
  std::filesystem::rename(tmp, cache_path);
  return d;
}

}  // namespace persymm
