#pragma once

#include <span>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

Graph make_empty(Vertex n);
Graph make_complete(Vertex n);
Graph make_path(Vertex n);
/// Simple cycle; n = 1, 2 degenerate to K1, K2.
Graph make_cycle(Vertex n);

/// a ~ b iff 1 <= |a-b| <= k.
Graph make_path_power(Vertex n, unsigned k);

/// a ~ b iff 1 <= circular distance(a, b) <= k. k >= n/2 gives K_n.
Graph make_cycle_power(Vertex n, unsigned k);

/// C_n^k plus the chords v_i v_{i+k+1 mod n} for 1 <= i <= q (1-based indices,
/// index 0 read as n). Requires n > 2, 1 <= k < n-1, 0 <= q < n.
Graph make_modified_cycle_power(Vertex n, unsigned k, unsigned q);

/// Vertices x_1..x_n with x_a ~ x_b (a < b) iff b <= a + d_a. The sequence must
/// be non-negative and monotonic non-decreasing.
Graph make_mnd(std::span<const long long> d);

Graph make_multipartite(std::span<const unsigned> part_sizes);

/// Layout of a chain of complete graphs.
///
/// Vertices are numbered link by link: the internal vertices of G1, then the
/// connecting vertex c1 shared by G1 and G2, then the internal vertices of G2,
/// then c2, and so on, ending with the internal vertices of the last link.
/// Labels are "G<i>:<j>" for the j-th internal vertex of link i and "c<i>" for
/// connecting vertices. The trivial chain (no links) is a single vertex.
struct ChainSpec {
  std::vector<unsigned> link_sizes;
  std::vector<Vertex> connecting;    // connecting[i] joins links i+1 and i+2 (1-based links)
  std::vector<VertexSet> links;      // links[i] = vertex set of link i+1
  std::vector<VertexSet> internals;  // internals[i] = links[i] minus connecting vertices

  std::size_t length() const { return link_sizes.size(); }
  Vertex vertex_count() const;
};

struct Chain {
  Graph graph;
  ChainSpec spec;
};

Chain make_chain(std::span<const unsigned> link_sizes);

/// Length 0 or 1, or |G_i| >= |G_{i-1}| + 1 for 2 <= i <= n-1 and |G_n| >= |G_{n-1}|.
bool is_special_chain(const ChainSpec& spec);

/// K2 x P_n. Vertex 2(i-1) is x_i and 2(i-1)+1 is y_i, labelled "x<i>", "y<i>".
Graph make_ladder(unsigned rungs);
constexpr Vertex ladder_x(unsigned rung) { return 2 * (rung - 1); }
constexpr Vertex ladder_y(unsigned rung) { return 2 * (rung - 1) + 1; }

/// A graph with two distinguished vertices.
struct MarkedGraph {
  Graph graph;
  Vertex x = 0;
  Vertex y = 0;
};

/// K_{2,t} with a path on 2k vertices glued at one endpoint to a vertex of the
/// 2-side. x is the free path endpoint, y a degree-2 vertex of the t-side.
MarkedGraph make_gtk(unsigned t, unsigned k);

/// Depth-two star: centre y, n middle vertices, one leaf per middle vertex.
/// x is the leaf under middle vertex 0.
MarkedGraph make_spider2(unsigned n);

/// Labelled tree on len(seq)+2 vertices with this Prüfer sequence.
Graph make_tree_from_prufer(std::span<const Vertex> seq);

}  // namespace ekr
