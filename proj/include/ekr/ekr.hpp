#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ekr/max_family.hpp"

namespace ekr {

struct EkrReport {
  std::string spec;  // graph spec text, filled by callers that have one
  unsigned r = 0;
  std::uint64_t star_size = 0;
  std::optional<Vertex> star_center;
  std::string star_center_label;
  /// Exact maximum when `exact`, otherwise the best size found.
  std::uint64_t max_family_size = 0;
  SetFamily witness;
  /// Empty only when the budget ran out before the verdict was settled.
  std::optional<bool> is_ekr;
  std::optional<bool> is_strict;
  std::uint64_t nodes = 0;
  double millis = 0;
  bool exact = true;
  std::string certificate;
};

struct EkrOptions {
  SolverOptions solver;
  bool strict = false;  // also decide strictness when EKR holds
};

/// Compares the largest intersecting subfamily of J^r(g) with the largest star.
/// Budget exhaustion yields an inexact report instead of an exception.
EkrReport is_r_ekr(const Graph& g, unsigned r, const EkrOptions& opts = {});

/// Strict EKR test; throws InputError if g is not r-EKR and
/// SearchBudgetExceeded if the budget runs out.
bool is_strict_r_ekr(const Graph& g, unsigned r, const SolverOptions& opts = {});

}  // namespace ekr
