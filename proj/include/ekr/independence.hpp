#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

/// An r-uniform family of vertex sets. Families produced by this library are
/// kept in canonical order (ascending bitmask) without duplicates, so family
/// equality is list equality.
struct SetFamily {
  unsigned r = 0;
  std::vector<VertexSet> sets;
  std::string origin;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  auto begin() const { return sets.begin(); }
  auto end() const { return sets.end(); }

  /// Binary search; requires canonical order.
  bool contains(VertexSet s) const;
  /// Sorts and removes duplicates.
  void canonicalize();

  bool operator==(const SetFamily& o) const { return r == o.r && sets == o.sets; }
};

SetFamily make_family(unsigned r, std::vector<VertexSet> sets, std::string origin = {});

bool is_intersecting(std::span<const VertexSet> sets);
inline bool is_intersecting(const SetFamily& f) { return is_intersecting(f.sets); }

/// Common intersection of all members (all of `universe` for an empty family).
VertexSet common_intersection(std::span<const VertexSet> sets, VertexSet universe);

/// True iff every member is an independent r-set of g and there are no repeats.
bool is_independent_family(const Graph& g, const SetFamily& f);

/// All independent r-sets. r = 0 gives the family {∅}.
SetFamily enumerate_independent(const Graph& g, unsigned r);

/// Independent r-sets containing v.
SetFamily star(const Graph& g, Vertex v, unsigned r);

/// Number of independent r-sets of g contained in `within`.
std::uint64_t count_independent(const Graph& g, unsigned r, VertexSet within);
inline std::uint64_t count_independent(const Graph& g, unsigned r) {
  return count_independent(g, r, g.vertices());
}

/// |star(g, v, r)| without materialising the family.
std::uint64_t star_size(const Graph& g, Vertex v, unsigned r);
std::vector<std::uint64_t> star_sizes(const Graph& g, unsigned r);

struct BestStar {
  std::optional<Vertex> center;  // empty only for the graph with no vertices
  std::uint64_t size = 0;
};

/// Largest star; ties go to the smallest centre.
BestStar best_star(const Graph& g, unsigned r);

/// Minimum size of a maximal independent set (independent domination number).
unsigned mu(const Graph& g);

/// Independence number.
unsigned alpha(const Graph& g);

}  // namespace ekr
