#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ekr/graph.hpp"
#include "ekr/report_json.hpp"

namespace ekr {

/// Bumped whenever solver output for a fixed input may change.
inline constexpr std::string_view kSolverVersion = "ekr-lab-1";

/// Identifies a result by the labelled graph as given (no isomorphism
/// reduction), r, the operation and any option text that affects the result.
std::string cache_key(const Graph& g, unsigned r, std::string_view op, std::string_view flags);

/// One JSON file per key under a directory. Entries from another solver
/// version, or whose stored key differs (hash collision), are misses.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;

private:
  std::filesystem::path file_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace ekr
