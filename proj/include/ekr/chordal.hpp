#pragma once

#include <optional>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

/// Simplicial elimination ordering: order[i] is simplicial in the subgraph
/// induced by order[i..n-1].
struct EliminationOrder {
  std::vector<Vertex> order;
};

bool is_simplicial(const Graph& g, Vertex v);

/// Checks an ordering against the definition, vertex by vertex.
bool is_elimination_order(const Graph& g, const std::vector<Vertex>& order);

/// Maximum cardinality search. The produced ordering is re-verified against the
/// definition before it is returned; nullopt means the graph is not chordal.
std::optional<EliminationOrder> find_elimination_order(const Graph& g);

inline bool is_chordal(const Graph& g) { return find_elimination_order(g).has_value(); }

struct DominationPair {
  Vertex v1;  // simplicial
  Vertex vi;  // neighbour of v1, N[v1] ⊆ N[vi]
};

/// Picks the simplicial vertex of smallest index in `component` that has a
/// neighbour there, and pairs it with its neighbour of largest degree (ties to
/// the smaller index). nullopt when the component has no edges or no such
/// simplicial vertex.
std::optional<DominationPair> find_domination_pair(const Graph& g, VertexSet component);

}  // namespace ekr
