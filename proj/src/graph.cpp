#include "ekr/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ekr {

std::string VertexSet::hex() const {
  std::ostringstream os;
  os << "0x" << std::hex << bits_;
  return os.str();
}

VertexSet compact(VertexSet s, VertexSet keep) {
  std::uint64_t out = 0;
  unsigned pos = 0;
  keep.for_each([&](Vertex v) {
    if (s.contains(v)) out |= std::uint64_t{1} << pos;
    ++pos;
  });
  return VertexSet(out);
}

VertexSet expand(VertexSet packed, VertexSet keep) {
  VertexSet out;
  unsigned pos = 0;
  keep.for_each([&](Vertex v) {
    if (packed.contains(pos)) out.insert(v);
    ++pos;
  });
  return out;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw InputError("vertex " + std::to_string(v) + " out of range for graph on " +
                     std::to_string(g.order()) + " vertices");
}

std::vector<std::string> default_labels(Vertex n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (Vertex v = 0; v < n; ++v) out.push_back(std::to_string(v));
  return out;
}

void check_labels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
}

}  // namespace

Graph::Graph(Vertex n) {
  if (n > kMaxVertices)
    throw CapacityError("graph on " + std::to_string(n) + " vertices exceeds the 64-vertex cap");
  adj_.assign(n, VertexSet{});
  labels_ = default_labels(n);
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (a == b) throw InputError("self loop at vertex " + std::to_string(a));
    if (g.adj_[a].contains(b))
      throw InputError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    g.adj_[a].insert(b);
    g.adj_[b].insert(a);
  }
  if (!labels.empty()) {
    if (labels.size() != n) throw InputError("label count does not match vertex count");
    check_labels(labels);
    g.labels_ = std::move(labels);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < order(); ++a)
    adj_[a].for_each([&](Vertex b) {
      if (a < b) out.emplace_back(a, b);
    });
  return out;
}

unsigned Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return adj_[v].size();
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !adj_[v].intersects(s); });
  return ok;
}

bool Graph::is_clique(VertexSet s) const {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && s.without(v).subset_of(adj_[v]); });
  return ok;
}

Vertex Graph::vertex_by_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("no vertex labeled '" + label + "'");
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<std::string> Graph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  s.for_each([&](Vertex v) { out.push_back(labels_.at(v)); });
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  Graph g;
  g.adj_.reserve(keep.size());
  keep.for_each([&](Vertex v) {
    g.adj_.push_back(compact(adj_[v] & keep, keep));
    g.labels_.push_back(labels_[v]);
  });
  return g;
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != order()) throw InputError("label count does not match vertex count");
  check_labels(labels);
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

GraphBuilder::GraphBuilder(Vertex n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex a, Vertex b) {
  check_vertex(g_, a);
  check_vertex(g_, b);
  if (a == b) throw InputError("self loop at vertex " + std::to_string(a));
  g_.adj_[a].insert(b);
  g_.adj_[b].insert(a);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
  check_vertex(g_, v);
  g_.labels_[v] = std::move(label);
  return *this;
}

Graph GraphBuilder::build() const {
  check_labels(g_.labels_);
  return g_;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.induced(g.vertices().without(v));
}

Graph delete_closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.induced(g.vertices() - g.closed_neighborhood(v));
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > kMaxVertices)
    throw CapacityError("disjoint union has " + std::to_string(total) + " vertices, cap is 64");
  GraphBuilder b(static_cast<Vertex>(total));
  Vertex offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& p = parts[i];
    for (auto [u, v] : p.edges()) b.add_edge(offset + u, offset + v);
    for (Vertex v = 0; v < p.order(); ++v) b.set_label(offset + v, std::to_string(i) + "." + p.label(v));
    offset += p.order();
  }
  return b.build();
}

unsigned degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_bipartite(const Graph& g, VertexSet* side) {
  VertexSet left, colored;
  for (VertexSet comp : connected_components(g)) {
    VertexSet layer = VertexSet::single(comp.first());
    bool parity = false;
    while (!layer.empty()) {
      if (!parity) left |= layer;
      colored |= layer;
      VertexSet next;
      layer.for_each([&](Vertex v) { next |= g.neighbors(v); });
      layer = next - colored;
      parity = !parity;
    }
  }
  const VertexSet right = g.vertices() - left;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).intersects(left.contains(v) ? left : right)) return false;
  if (side) *side = left;
  return true;
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("edge list: expected header 'n m'");
  if (n > kMaxVertices) throw CapacityError("edge list declares " + std::to_string(n) + " vertices, cap is 64");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge list: endpoint out of range on edge " + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw InputError("edge list: trailing data after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace ekr
