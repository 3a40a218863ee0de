#include "ekr/chordal.hpp"

namespace ekr {

bool is_simplicial(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return g.is_clique(g.neighbors(v));
}

bool is_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.order()) return false;
  VertexSet seen;
  for (Vertex v : order) {
    if (v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  VertexSet remaining = g.vertices();
  for (Vertex v : order) {
    if (!g.is_clique(g.neighbors(v) & remaining)) return false;
    remaining.erase(v);
  }
  return true;
}

std::optional<EliminationOrder> find_elimination_order(const Graph& g) {
  const Vertex n = g.order();
  std::vector<unsigned> weight(n, 0);
  std::vector<Vertex> visit;  // MCS visiting order; its reverse eliminates
  VertexSet unnumbered = g.vertices();
  while (!unnumbered.empty()) {
    Vertex best = unnumbered.first();
    unnumbered.for_each([&](Vertex v) {
      if (weight[v] > weight[best]) best = v;
    });
    visit.push_back(best);
    unnumbered.erase(best);
    (g.neighbors(best) & unnumbered).for_each([&](Vertex v) { ++weight[v]; });
  }
  EliminationOrder eo{{visit.rbegin(), visit.rend()}};
  if (!is_elimination_order(g, eo.order)) return std::nullopt;
  return eo;
}

std::optional<DominationPair> find_domination_pair(const Graph& g, VertexSet component) {
  component &= g.vertices();
  std::optional<DominationPair> out;
  component.for_each([&](Vertex v) {
    if (out) return;
    // Full neighbourhood, so N[v] ⊆ N[pick] holds in g and not only inside the component.
    const VertexSet nb = g.neighbors(v);
    if (nb.empty() || !nb.subset_of(component) || !g.is_clique(nb)) return;
    Vertex pick = nb.first();
    nb.for_each([&](Vertex u) {
      if (g.degree(u) > g.degree(pick)) pick = u;
    });
    out = DominationPair{v, pick};
  });
  return out;
}

}  // namespace ekr
