#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ekr/graph.hpp"
#include "ekr/independence.hpp"

namespace ekr {

enum class StrictMethod { automatic, spectral, search };

struct SolverOptions {
  std::uint64_t node_budget = 50'000'000;
  /// Root eigenvalue bound; skipped when |J^r| exceeds spectral_limit.
  bool spectral = true;
  std::size_t spectral_limit = 500;
  StrictMethod strict_method = StrictMethod::automatic;
};

/// Thrown when the node budget runs out. Carries the best family found so far
/// and the best upper bound known at that point.
class SearchBudgetExceeded : public std::runtime_error {
public:
  SearchBudgetExceeded(SetFamily best, std::size_t upper_bound, std::uint64_t nodes);
  SetFamily best;
  std::size_t upper_bound;
  std::uint64_t nodes;
};

struct MaxFamilyResult {
  std::size_t size = 0;
  /// A maximum star (smallest centre) when some star is maximum, otherwise the
  /// lexicographically least maximum family.
  SetFamily witness;
  std::uint64_t nodes = 0;
  /// "empty", "spectral" or "search": what closed the upper bound.
  std::string certificate;
};

/// Maximum intersecting subfamily of J^r(g). `lower_bound` is a hint for the
/// search; a hint that turns out unattainable only costs time.
MaxFamilyResult max_intersecting_family(const Graph& g, unsigned r,
                                        std::optional<std::size_t> lower_bound = std::nullopt,
                                        const SolverOptions& opts = {});

/// floor of min over t of lambda_max(J + t A), A the disjointness matrix of J^r(g).
/// Valid upper bound on every intersecting subfamily.
std::size_t spectral_bound(const Graph& g, unsigned r);

struct StrictnessResult {
  bool strict = true;
  /// A maximum intersecting family with empty common intersection, if any.
  std::optional<SetFamily> non_star;
  /// Number of maximum families found; only the spectral route counts them all.
  std::optional<std::size_t> maximum_families;
  std::uint64_t nodes = 0;
  std::string method;  // "vacuous", "spectral" or "search"
};

/// Decides whether every intersecting subfamily of size `max_size` is a star.
/// `max_size` must be the true maximum.
StrictnessResult check_strictness(const Graph& g, unsigned r, std::size_t max_size,
                                  const SolverOptions& opts = {});

}  // namespace ekr
