#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ekr/ekr.hpp"
#include "ekr/graph.hpp"

namespace ekr {

/// One offending instance. `spec` rebuilds the graph through build_graph;
/// `details` are named integers in a fixed order.
struct Violation {
  std::string spec;
  unsigned r = 0;
  std::vector<std::pair<std::string, long long>> details;
  std::string note;

  long long get(const std::string& key) const;
  auto operator<=>(const Violation&) const = default;
};

struct ScanResult {
  std::string scan;
  std::string space;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> skipped_specs;
  std::vector<Violation> violations;  // sorted
  double millis = 0;
};

enum class TreeSource {
  canonical,       // one tree per isomorphism class
  prufer,          // all labelled trees, Prüfer order
  prufer_reverse,  // all labelled trees, reverse Prüfer order
};

struct TreeScanOptions {
  TreeSource source = TreeSource::canonical;
  /// With a Prüfer source, analyse each isomorphism class once, on its
  /// canonical representative. Without it every labelled tree is analysed.
  bool dedup = true;
  unsigned jobs = 1;
  unsigned n_min = 1;
};

/// Spec text that rebuilds g exactly ("tree:..." for trees, "edges:n:..." otherwise).
std::string spec_of(const Graph& g);

/// For every tree on n_min..n_max vertices and 1 ≤ r ≤ r_max: flags trees
/// where no leaf attains the largest star. Details: max_leaf_star, max_star,
/// argmax (a vertex attaining max_star).
ScanResult scan_leaf_star(unsigned n_max, unsigned r_max, const TreeScanOptions& opts = {});

/// For every tree, r ≤ r_max and every pair x, y on the same side with
/// d(x) < d(y): flags |J^r_x| < |J^r_y|. Details: x, y, dx, dy, sx, sy, path.
ScanResult scan_degree_sort(unsigned n_max, unsigned r_max, const TreeScanOptions& opts = {});

/// |J^3_y(G_{t,k})| - |J^3_x(G_{t,k})| by enumeration. Requires t ≥ 2k ≥ 4.
long long check_gtk_gap(unsigned t, unsigned k);

/// (|J^r_x(G_{t,2})|, |J^r_y(G_{t,2})|) by enumeration. Requires t > r > 3.
std::pair<std::uint64_t, std::uint64_t> check_gtk_higher_r(unsigned t, unsigned r);

/// Gap check over 2 ≤ k, 2k ≤ t ≤ t_max; violations where gap ≠ t - 2k + 1.
ScanResult scan_gtk_grid(unsigned t_max);

/// Star sizes at x and y of G_{t,2} for r < t ≤ t_max, 4 ≤ r ≤ r_max; flags
/// any pair with y - x ≠ C(t-1, r-2).
ScanResult scan_gtk_higher(unsigned t_max, unsigned r_max);

/// Runs the EKR test for every r ≤ mu/2 on each corpus graph (≤ 16 vertices).
/// Budget overruns are counted as skipped, never as passes.
ScanResult scan_minmax_conjecture(const std::vector<std::string>& corpus, const EkrOptions& opts = {},
                                  unsigned jobs = 1);

/// Chordal graphs with an isolated vertex, cycle powers, ladders and a few
/// other small families.
std::vector<std::string> default_minmax_corpus();

/// Trees on n vertices where some leaf star is `leaf_star`, some internal star
/// is `internal_star` > leaf_star, and yet only leaves attain the maximum star.
std::vector<std::string> find_leaf_beaten_trees(unsigned n, unsigned r, std::uint64_t leaf_star,
                                                std::uint64_t internal_star);

}  // namespace ekr
