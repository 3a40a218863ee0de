#include "ekr/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ekr {

std::string cache_key(const Graph& g, unsigned r, std::string_view op, std::string_view flags) {
  std::ostringstream key;
  key << op << "|r=" << r << "|" << flags << "|n=" << g.order() << "|adj=";
  for (Vertex v = 0; v < g.order(); ++v) key << g.neighbors(v).hex() << ",";
  key << "|labels=";
  for (Vertex v = 0; v < g.order(); ++v) key << g.label(v).size() << ":" << g.label(v);
  return key.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create cache directory '" + dir_.string() + "': " + ec.message());
}

std::filesystem::path ResultCache::file_for(const std::string& key) const {
  // FNV-1a over the full key; the key itself is stored to rule out collisions.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(h));
  return dir_ / name;
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  const Json entry = Json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("solver_version", "") != kSolverVersion || entry.value("key", "") != key) return std::nullopt;
  if (!entry.contains("value")) return std::nullopt;
  return entry["value"];
}

void ResultCache::store(const std::string& key, const Json& value) const {
  Json entry;
  entry["solver_version"] = std::string(kSolverVersion);
  entry["key"] = key;
  entry["value"] = value;
  const auto target = file_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // an unwritable cache only costs recomputation
    out << entry.dump() << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace ekr
