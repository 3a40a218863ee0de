#pragma once

// Brute-force oracles and random instance generators shared by the tests.
// None of the oracles call into the library beyond Graph accessors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/independence.hpp"

namespace oracle {

using ekr::Edge;
using ekr::Graph;
using ekr::Vertex;
using ekr::VertexSet;
using Rng = std::mt19937_64;

inline std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline bool independent(const Graph& g, std::uint64_t mask) {
  for (Vertex u = 0; u < g.order(); ++u)
    if ((mask >> u) & 1U)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (((mask >> v) & 1U) && g.adjacent(u, v)) return false;
  return true;
}

/// Every independent r-set, by sweeping all 2^n subsets.
inline std::vector<VertexSet> independent_sets(const Graph& g, unsigned r) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m)
    if (static_cast<unsigned>(std::popcount(m)) == r && independent(g, m)) out.emplace_back(m);
  return out;
}

inline std::uint64_t star_size(const Graph& g, Vertex v, unsigned r) {
  std::uint64_t c = 0;
  for (VertexSet s : independent_sets(g, r)) c += s.contains(v);
  return c;
}

inline std::uint64_t best_star(const Graph& g, unsigned r) {
  std::uint64_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, oracle::star_size(g, v, r));
  return best;
}

/// Largest pairwise-intersecting subfamily of J^r(g) by plain include/exclude
/// recursion over every intersecting subfamily. Exponential; small inputs only.
inline std::size_t max_intersecting(const Graph& g, unsigned r) {
  const auto sets = independent_sets(g, r);
  std::vector<VertexSet> chosen;
  std::size_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (chosen.size() + (sets.size() - i) <= best) return;
    if (i == sets.size()) {
      best = chosen.size();
      return;
    }
    bool ok = true;
    for (VertexSet c : chosen) ok = ok && c.intersects(sets[i]);
    if (ok) {
      chosen.push_back(sets[i]);
      rec(i + 1);
      chosen.pop_back();
    }
    rec(i + 1);
  };
  rec(0);
  return best;
}

struct MaxFamilies {
  std::size_t size = 0;
  std::vector<VertexSet> least;  // lexicographically least maximum family
  std::size_t count = 0;         // number of maximum families
  bool non_star = false;         // some maximum family has empty common intersection
};

/// Every maximum intersecting subfamily of J^r(g), by include-first
/// recursion; the first maximum reached is the lexicographically least.
inline MaxFamilies all_max_intersecting(const Graph& g, unsigned r) {
  const auto sets = independent_sets(g, r);
  std::vector<VertexSet> chosen;
  MaxFamilies out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (chosen.size() + (sets.size() - i) < out.size) return;
    if (i == sets.size()) {
      std::uint64_t common = ~std::uint64_t{0};
      for (VertexSet c : chosen) common &= c.bits();
      if (chosen.size() > out.size) out = MaxFamilies{chosen.size(), chosen, 0, false};
      ++out.count;
      out.non_star = out.non_star || (common == 0 && !chosen.empty());
      return;
    }
    bool ok = true;
    for (VertexSet c : chosen) ok = ok && c.intersects(sets[i]);
    if (ok) {
      chosen.push_back(sets[i]);
      rec(i + 1);
      chosen.pop_back();
    }
    rec(i + 1);
  };
  rec(0);
  return out;
}

inline bool is_maximal_independent(const Graph& g, std::uint64_t mask) {
  if (!independent(g, mask)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!((mask >> v) & 1U) && independent(g, mask | (std::uint64_t{1} << v))) return false;
  return true;
}

inline unsigned mu(const Graph& g) {
  unsigned best = g.order();
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m)
    if (static_cast<unsigned>(std::popcount(m)) < best && is_maximal_independent(g, m))
      best = static_cast<unsigned>(std::popcount(m));
  return best;
}

inline unsigned alpha(const Graph& g) {
  unsigned best = 0;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m)
    if (static_cast<unsigned>(std::popcount(m)) > best && independent(g, m))
      best = static_cast<unsigned>(std::popcount(m));
  return best;
}

/// True iff some vertex subset of size ≥ 4 induces a cycle.
inline bool has_long_induced_cycle(const Graph& g) {
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (std::popcount(m) < 4) continue;
    bool all_two = true;
    for (Vertex v = 0; v < g.order() && all_two; ++v)
      if ((m >> v) & 1U) all_two = std::popcount(g.neighbors(v).bits() & m) == 2;
    if (!all_two) continue;
    // 2-regular: a cycle iff connected.
    std::uint64_t seen = m & (~m + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (Vertex v = 0; v < g.order(); ++v)
        if ((frontier >> v) & 1U) next |= g.neighbors(v).bits() & m;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == m) return true;
  }
  return false;
}

/// Graph on n vertices whose edges are the bits of `code` over pairs (u<v) in
/// lexicographic order.
inline Graph graph_from_code(Vertex n, std::uint64_t code) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph random_graph(Vertex n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Random chordal graph: each new vertex is joined to a random clique of the
/// vertices placed so far, so the reverse insertion order is a simplicial
/// elimination ordering. The vertex numbering is then shuffled.
inline Graph random_chordal(Vertex n, Rng& rng, double grow = 0.6) {
  std::vector<std::uint64_t> adj(n, 0);
  std::bernoulli_distribution coin(grow);
  for (Vertex v = 1; v < n; ++v) {
    if (!coin(rng)) continue;  // isolated start of a new component
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    std::uint64_t clique = std::uint64_t{1} << pick(rng);
    std::uint64_t cand = 0;
    for (Vertex u = 0; u < v; ++u)
      if ((clique & adj[u]) == clique && !((clique >> u) & 1U)) cand |= std::uint64_t{1} << u;
    while (cand && coin(rng)) {
      std::vector<Vertex> cs;
      for (Vertex u = 0; u < v; ++u)
        if ((cand >> u) & 1U) cs.push_back(u);
      const Vertex u = cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)];
      clique |= std::uint64_t{1} << u;
      cand &= adj[u];
    }
    for (Vertex u = 0; u < v; ++u)
      if ((clique >> u) & 1U) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
      }
  }
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((adj[u] >> v) & 1U) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(n, edges);
}

/// g with one extra isolated vertex appended (index g.order()).
inline Graph with_isolated(const Graph& g) {
  const auto e = g.edges();
  return Graph::from_edges(g.order() + 1, e);
}

/// Random permutation image of g; labels travel with their vertices.
inline Graph permuted(const Graph& g, Rng& rng, std::vector<Vertex>* perm_out = nullptr) {
  std::vector<Vertex> perm(g.order());
  for (Vertex i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  std::vector<std::string> labels(g.order());
  for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
  if (perm_out) *perm_out = perm;
  return Graph::from_edges(g.order(), edges, labels);
}

/// Textbook Prüfer decoding with a min-heap of current leaves.
inline std::vector<Edge> prufer_decode(const std::vector<Vertex>& seq) {
  const Vertex n = static_cast<Vertex>(seq.size() + 2);
  std::vector<unsigned> deg(n, 1);
  for (Vertex s : seq) ++deg[s];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex s : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--deg[s] == 1) leaves.push(s);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  const Vertex b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

/// Greedy random maximal intersecting subfamily of `pool`.
inline ekr::SetFamily random_maximal_intersecting(std::vector<VertexSet> pool, unsigned r, Rng& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<VertexSet> chosen;
  for (VertexSet s : pool) {
    bool ok = true;
    for (VertexSet c : chosen) ok = ok && c.intersects(s);
    if (ok) chosen.push_back(s);
  }
  return ekr::make_family(r, chosen, "random");
}

/// Pointwise compression written out from its case definition.
inline std::vector<VertexSet> compress(const ekr::SetFamily& f, Vertex v1, Vertex vi) {
  std::vector<VertexSet> out;
  for (VertexSet a : f) {
    const VertexSet moved = a.without(vi).with(v1);
    out.push_back(a.contains(vi) && !a.contains(v1) && !f.contains(moved) ? moved : a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random chordal graph on `base` vertices with a clique H hanging off one of
/// its vertices v: H = {v} plus s-1 new vertices adjacent only within H.
struct CliqueInstance {
  Graph g;
  VertexSet clique;
  Vertex v = 0;
};

inline CliqueInstance hanging_clique(oracle::Rng& rng, Vertex base, unsigned s) {
  const Graph g0 = oracle::random_chordal(base, rng);
  const Vertex v = static_cast<Vertex>(rng() % base);
  auto edges = g0.edges();
  VertexSet clique{v};
  for (unsigned k = 0; k + 1 < s; ++k) clique.insert(base + k);
  for (Vertex a : clique.members())
    for (Vertex b : clique.members())
      if (a < b) edges.emplace_back(a, b);
  return {Graph::from_edges(base + s, edges), clique, v};
}

}  // namespace oracle
