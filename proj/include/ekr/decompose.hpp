#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/independence.hpp"

namespace ekr {

// All families below are expressed in the vertex numbering of the input graph,
// including those that live on a subgraph (G - v, G↓v, G/H, smaller ladders).
// `compact(set, kept_vertices)` converts to the subgraph's own numbering.

struct CompressionSplit {
  SetFamily compressed;  // image of the family under the compression
  SetFamily kept;        // members of `compressed` avoiding vi
  SetFamily reduced;     // {A - vi : vi ∈ A ∈ compressed}, (r-1)-uniform
};

/// Shifts vi to v1 wherever v1 is absent and the image is new. Requires
/// v1vi ∈ E, N[v1] ⊆ N[vi] and an intersecting family of independent r-sets;
/// violations raise InputError. The size identities and intersecting
/// properties of the parts are checked and raise InternalError if broken.
CompressionSplit compress_family(const Graph& g, const SetFamily& family, Vertex v1, Vertex vi);

/// G/H: the clique is replaced by v1, which inherits every outside neighbour.
/// Vertices of H other than v1 are removed; the result is renumbered.
Graph contract_clique(const Graph& g, VertexSet clique, Vertex v1);

struct ContractionOptions {
  /// Vertex the clique contracts to. Default: the smallest clique vertex whose
  /// outside neighbourhood contains that of every other clique vertex, or the
  /// smallest clique vertex if there is none.
  std::optional<Vertex> v1;
  /// The family is not known to be maximum; an identity failure is then an
  /// InputError rather than an InternalError.
  bool non_maximal = false;
};

struct ContractionSplit {
  Vertex v1 = 0;
  std::vector<Vertex> others;  // v2..vs in increasing order; c, d, e are indexed alike
  Graph contracted;            // G/H
  VertexSet contracted_vertices;  // vertices of g surviving in G/H
  SetFamily b;
  std::vector<SetFamily> c, d, e;
  std::size_t d_union = 0;  // |D_2 ∪ ... ∪ D_s|
};

/// Splits a maximum intersecting family along a clique H (|H| ≥ 2) and checks
/// |A| = |B| + Σ|C_i| + |∪D_i| + Σ|E_i| together with the intersecting and
/// containment properties of B and the C_i.
///
/// The identity can fail when some clique vertex has an outside neighbour not
/// adjacent to v1: a member through that vertex is then lost by the
/// contraction without landing in any D_i or E_i. That case raises InputError,
/// as does any failure with `non_maximal` set; any other failure is an
/// InternalError.
ContractionSplit contract_clique_split(const Graph& g, VertexSet clique, const SetFamily& family,
                                       const ContractionOptions& opts = {});

/// Members A ∪ {vi} of the family (vi ∈ H - v1) for which some A ∪ {vj} is also
/// a member, c(A ∪ {vi}) is independent in G/H, yet A ∪ {v1} is missing.
/// Empty for maximum families when |H| ≥ 3.
std::vector<VertexSet> claim_cl_violations(const Graph& g, VertexSet clique, Vertex v1, const SetFamily& family);

struct LadderReplay {
  unsigned n = 0;
  SetFamily b, c1, c2;
  std::array<SetFamily, 6> d;  // D_5 and D_6 are the fixed sets intersected with the family
  SetFamily e, f;              // C_1 ∪ (D_1 - x_n), C_2 ∪ (D_2 - y_n)
  std::uint64_t star_n = 0;      // |J^3_{x1}(L_n)|
  std::uint64_t star_n1 = 0;     // |J^3_{x1}(L_{n-1})|
  std::uint64_t star_n2_r2 = 0;  // |J^2_{x1}(L_{n-2})|
};

/// Splits an intersecting family of independent 3-sets of L_n (n ≥ 4) by
/// folding the last rung onto the previous one. Checks
///   |A| = |B| + |C_1| + |C_2| + Σ|D_i| = |B| + |E| + |F| + Σ_{i≥3}|D_i|,
/// that E and F are disjoint unions, intersecting and inside J^2(L_{n-2}), and
/// the star inequality |J^3_{x1}(L_n)| ≥ |J^3_{x1}(L_{n-1})| + 2|J^2_{x1}(L_{n-2})| + 2.
LadderReplay replay_ladder_decomposition(unsigned n, const SetFamily& family);

/// For an isolated vertex x: every star is at most the star at x.
bool lemma_l1_holds(const Graph& g, Vertex x, unsigned r);

/// With N[v1] ⊆ N[v2]: mu(G - v2) ≥ mu(G) and mu(G↓v2) + 1 ≥ mu(G).
bool lemma_l2_holds(const Graph& g, Vertex v1, Vertex v2);

struct StarSplitCounts {
  std::uint64_t whole = 0;    // |J^r_x(G)|
  std::uint64_t deleted = 0;  // |J^r_x(G - v)|
  std::uint64_t reduced = 0;  // |J^{r-1}_x(G↓v)|
};

/// Star at isolated x split by whether v is present; whole = deleted + reduced.
StarSplitCounts star_split_counts(const Graph& g, Vertex x, Vertex v, unsigned r);

struct CompressionBound {
  std::uint64_t family = 0;
  std::uint64_t kept = 0, reduced = 0;           // parts of the compressed family
  std::uint64_t kept_star = 0, reduced_star = 0;  // |J^r_x(G - vi)|, |J^{r-1}_x(G↓vi)|
  std::uint64_t star = 0;                         // |J^r_x(G)|
};

/// Quantities of the compression bound for an isolated x ≠ vi. Asserts
/// |A| = kept + reduced and star = kept_star + reduced_star; the inequalities
/// |A| ≤ star, kept ≤ kept_star and reduced ≤ reduced_star hold only under the
/// theorem's hypotheses and are left to the caller.
CompressionBound compression_bound(const Graph& g, const SetFamily& family, Vertex x, Vertex v1, Vertex vi);

}  // namespace ekr
