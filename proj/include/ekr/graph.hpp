#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ekr/errors.hpp"
#include "ekr/vertex_set.hpp"

namespace ekr {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Every vertex carries a label. Labels default to the decimal index and
/// survive vertex deletion, so subgraphs can still be reported in terms of the
/// vertices of the graph they were cut from.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(Vertex n);

  /// Rejects self loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  Vertex order() const { return static_cast<Vertex>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  VertexSet neighbors(Vertex v) const { return adj_.at(v); }
  VertexSet closed_neighborhood(Vertex v) const { return adj_.at(v).with(v); }
  bool adjacent(Vertex a, Vertex b) const { return adj_.at(a).contains(b); }
  unsigned degree(Vertex v) const;

  bool is_independent(VertexSet s) const;
  bool is_clique(VertexSet s) const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the vertex with this label.
  Vertex vertex_by_label(const std::string& label) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  /// Subgraph induced by `keep`; surviving vertices are renumbered in order.
  Graph induced(VertexSet keep) const;

  /// Same adjacency, different labels.
  Graph relabeled(std::vector<std::string> labels) const;

  bool operator==(const Graph&) const = default;

private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Accumulates edges idempotently: repeated edges collapse, which is what the
/// generators want when index arithmetic produces the same pair twice.
class GraphBuilder {
public:
  explicit GraphBuilder(Vertex n);
  GraphBuilder& add_edge(Vertex a, Vertex b);
  GraphBuilder& set_label(Vertex v, std::string label);
  Vertex order() const { return static_cast<Vertex>(g_.adj_.size()); }
  Graph build() const;

private:
  Graph g_;
};

/// G - v.
Graph delete_vertex(const Graph& g, Vertex v);

/// G↓v: removes v together with all of its neighbours.
Graph delete_closed_neighborhood(const Graph& g, Vertex v);

/// Block-diagonal union. Labels become "<i>.<label>" with i the position of
/// the part, which records the component boundaries.
Graph disjoint_union(std::span<const Graph> parts);

unsigned degree(const Graph& g, Vertex v);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_bipartite(const Graph& g, VertexSet* side = nullptr);

/// Edge-list text: "n m" then m lines "u v", 0-based. Parse errors throw InputError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ekr
