#include "ekr/generators.hpp"

#include <algorithm>
#include <string>

namespace ekr {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

}  // namespace

Graph make_empty(Vertex n) { return Graph(n); }

Graph make_complete(Vertex n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph make_path(Vertex n) { return make_path_power(n, 1); }

Graph make_cycle(Vertex n) { return make_cycle_power(n, 1); }

Graph make_path_power(Vertex n, unsigned k) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n && v - u <= k; ++v) b.add_edge(u, v);
  return b.build();
}

Graph make_cycle_power(Vertex n, unsigned k) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Vertex d = std::min(v - u, n - (v - u));
      if (d >= 1 && d <= k) b.add_edge(u, v);
    }
  return b.build();
}

Graph make_modified_cycle_power(Vertex n, unsigned k, unsigned q) {
  require(n > 2, "modified cycle power needs n > 2");
  require(k >= 1 && k < n - 1, "modified cycle power needs 1 <= k < n-1");
  require(q < n, "modified cycle power needs 0 <= q < n");
  GraphBuilder b(n);
  for (auto [u, v] : make_cycle_power(n, k).edges()) b.add_edge(u, v);
  // 1-based: v_i -- v_{(i+k+1) mod n}, residue 0 meaning v_n.
  for (unsigned i = 1; i <= q; ++i) {
    unsigned j = (i + k + 1) % n;
    if (j == 0) j = n;
    b.add_edge(i - 1, j - 1);
  }
  return b.build();
}

Graph make_mnd(std::span<const long long> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    require(d[i] >= 0, "mnd sequence must be non-negative");
    require(i == 0 || d[i - 1] <= d[i], "mnd sequence must be monotonic non-decreasing");
  }
  if (d.size() > kMaxVertices) throw CapacityError("mnd graph exceeds the 64-vertex cap");
  const auto n = static_cast<Vertex>(d.size());
  GraphBuilder b(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n && static_cast<long long>(c - a) <= d[a]; ++c) b.add_edge(a, c);
  return b.build();
}

Graph make_multipartite(std::span<const unsigned> part_sizes) {
  unsigned total = 0;
  for (auto s : part_sizes) total += s;
  if (total > kMaxVertices) throw CapacityError("multipartite graph exceeds the 64-vertex cap");
  std::vector<unsigned> part_of;
  for (unsigned p = 0; p < part_sizes.size(); ++p) part_of.insert(part_of.end(), part_sizes[p], p);
  GraphBuilder b(total);
  for (Vertex u = 0; u < total; ++u)
    for (Vertex v = u + 1; v < total; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return b.build();
}

Vertex ChainSpec::vertex_count() const {
  if (link_sizes.empty()) return 1;
  unsigned total = 0;
  for (auto s : link_sizes) total += s;
  return total - static_cast<unsigned>(link_sizes.size() - 1);
}

Chain make_chain(std::span<const unsigned> link_sizes) {
  for (auto s : link_sizes) require(s >= 2, "chain links must have at least 2 vertices");
  ChainSpec spec;
  spec.link_sizes.assign(link_sizes.begin(), link_sizes.end());
  const std::size_t n = link_sizes.size();
  if (n == 0) {
    Graph g = Graph(1).relabeled({"c0"});
    return {g, spec};
  }
  const Vertex total = spec.vertex_count();
  if (total > kMaxVertices) throw CapacityError("chain exceeds the 64-vertex cap");

  std::vector<std::string> labels;
  Vertex next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned connectors = (n == 1) ? 0 : (i == 0 || i == n - 1) ? 1 : 2;
    const unsigned internal = link_sizes[i] - connectors;
    VertexSet link;
    if (i > 0) link.insert(spec.connecting.back());
    VertexSet inner;
    for (unsigned j = 0; j < internal; ++j) {
      inner.insert(next++);
      labels.push_back("G" + std::to_string(i + 1) + ":" + std::to_string(j));
    }
    link |= inner;
    if (i + 1 < n) {
      spec.connecting.push_back(next);
      link.insert(next++);
      labels.push_back("c" + std::to_string(i + 1));
    }
    spec.links.push_back(link);
    spec.internals.push_back(inner);
  }

  GraphBuilder b(total);
  for (Vertex v = 0; v < total; ++v) b.set_label(v, labels[v]);
  for (VertexSet link : spec.links)
    link.for_each([&](Vertex u) {
      link.for_each([&](Vertex v) {
        if (u < v) b.add_edge(u, v);
      });
    });
  return {b.build(), spec};
}

bool is_special_chain(const ChainSpec& spec) {
  const auto& s = spec.link_sizes;
  const std::size_t n = s.size();
  if (n <= 1) return true;
  // 1-based i in [2, n-1] is 0-based index in [1, n-2].
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (s[i] < s[i - 1] + 1) return false;
  return s[n - 1] >= s[n - 2];
}

Graph make_ladder(unsigned rungs) {
  require(rungs >= 1, "ladder needs at least one rung");
  if (2 * rungs > kMaxVertices) throw CapacityError("ladder exceeds the 64-vertex cap");
  GraphBuilder b(2 * rungs);
  for (unsigned i = 1; i <= rungs; ++i) {
    b.set_label(ladder_x(i), "x" + std::to_string(i));
    b.set_label(ladder_y(i), "y" + std::to_string(i));
    b.add_edge(ladder_x(i), ladder_y(i));
    if (i < rungs) {
      b.add_edge(ladder_x(i), ladder_x(i + 1));
      b.add_edge(ladder_y(i), ladder_y(i + 1));
    }
  }
  return b.build();
}

MarkedGraph make_gtk(unsigned t, unsigned k) {
  require(t >= 1 && k >= 1, "G_{t,k} needs t >= 1 and k >= 1");
  // a, b: the 2-side; w1..wt: the t-side; p1..p_{2k-1}: path hanging off a.
  const Vertex n = t + 2 + (2 * k - 1);
  if (n > kMaxVertices) throw CapacityError("G_{t,k} exceeds the 64-vertex cap");
  GraphBuilder b(n);
  b.set_label(0, "a").set_label(1, "b");
  for (unsigned i = 0; i < t; ++i) {
    const Vertex w = 2 + i;
    b.set_label(w, "w" + std::to_string(i + 1));
    b.add_edge(0, w).add_edge(1, w);
  }
  Vertex prev = 0;
  for (unsigned i = 1; i <= 2 * k - 1; ++i) {
    const Vertex p = t + 1 + i;
    b.set_label(p, "p" + std::to_string(i));
    b.add_edge(prev, p);
    prev = p;
  }
  return {b.build(), prev, 2};
}

MarkedGraph make_spider2(unsigned n) {
  require(n >= 1, "depth-two star needs n >= 1");
  if (2 * n + 1 > kMaxVertices) throw CapacityError("depth-two star exceeds the 64-vertex cap");
  GraphBuilder b(2 * n + 1);
  b.set_label(0, "y");
  for (unsigned i = 0; i < n; ++i) {
    const Vertex mid = 1 + i, leaf = 1 + n + i;
    b.set_label(mid, "m" + std::to_string(i)).set_label(leaf, "l" + std::to_string(i));
    b.add_edge(0, mid).add_edge(mid, leaf);
  }
  return {b.build(), n + 1, 0};
}

Graph make_tree_from_prufer(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  if (n > kMaxVertices) throw CapacityError("Prüfer tree exceeds the 64-vertex cap");
  for (Vertex s : seq)
    require(s < n, "Prüfer entry " + std::to_string(s) + " out of range [0," + std::to_string(n) + ")");
  std::vector<unsigned> remaining(n, 1);
  for (Vertex s : seq) ++remaining[s];
  GraphBuilder b(static_cast<Vertex>(n));
  for (Vertex s : seq) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    b.add_edge(leaf, s);
    --remaining[leaf];
    --remaining[s];
  }
  Vertex u = 0;
  while (remaining[u] != 1) ++u;
  Vertex v = u + 1;
  while (remaining[v] != 1) ++v;
  b.add_edge(u, v);
  return b.build();
}

}  // namespace ekr
