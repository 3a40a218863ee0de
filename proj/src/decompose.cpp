#include "ekr/decompose.hpp"

#include <algorithm>

#include "ekr/generators.hpp"

namespace ekr {

namespace {

void require_family(const Graph& g, const SetFamily& family, const char* what) {
  if (!is_independent_family(g, family))
    throw InputError(std::string(what) + ": family must consist of distinct independent r-sets");
  if (!is_intersecting(family)) throw InputError(std::string(what) + ": family must be intersecting");
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

Vertex index_in(VertexSet keep, Vertex v) { return compact(VertexSet::single(v), keep).first(); }

// Star size at x (a vertex of g) computed inside g[keep].
std::uint64_t star_in(const Graph& g, VertexSet keep, Vertex x, unsigned r) {
  if (r == 0) return 0;
  return star_size(g.induced(keep), index_in(keep, x), r);
}

}  // namespace

CompressionSplit compress_family(const Graph& g, const SetFamily& family, Vertex v1, Vertex vi) {
  require_vertex(g, v1, "compress_family");
  require_vertex(g, vi, "compress_family");
  if (!g.adjacent(v1, vi)) throw InputError("compress_family: v1 and vi must be adjacent");
  if (!g.closed_neighborhood(v1).subset_of(g.closed_neighborhood(vi)))
    throw InputError("compress_family: N[v1] must be contained in N[vi]");
  require_family(g, family, "compress_family");
  if (family.r == 0) throw InputError("compress_family: r must be at least 1");

  const unsigned r = family.r;
  std::vector<VertexSet> image;
  image.reserve(family.size());
  for (VertexSet a : family) {
    const VertexSet shifted = a.without(vi).with(v1);
    const bool moves = a.contains(vi) && !a.contains(v1) && !family.contains(shifted);
    image.push_back(moves ? shifted : a);
  }
  CompressionSplit out;
  out.compressed = make_family(r, image, "compressed");
  std::vector<VertexSet> kept, reduced;
  for (VertexSet a : out.compressed) {
    if (a.contains(vi))
      reduced.push_back(a.without(vi));
    else
      kept.push_back(a);
  }
  out.kept = make_family(r, kept, "kept");
  out.reduced = make_family(r - 1, reduced, "reduced");

  ensure(out.compressed.size() == family.size(), "compression changed the family size");
  ensure(family.size() == out.kept.size() + out.reduced.size(), "compression split does not add up");
  ensure(is_intersecting(out.kept), "kept family is not intersecting");
  ensure(is_intersecting(out.reduced), "reduced family is not intersecting");
  const VertexSet minus_vi = g.vertices().without(vi);
  const VertexSet down_vi = g.vertices() - g.closed_neighborhood(vi);
  for (VertexSet a : out.kept) ensure(a.subset_of(minus_vi) && g.is_independent(a), "kept set outside G - vi");
  for (VertexSet a : out.reduced)
    ensure(a.subset_of(down_vi) && g.is_independent(a) && a.size() + 1 == r, "reduced set outside G↓vi");
  return out;
}

Graph contract_clique(const Graph& g, VertexSet clique, Vertex v1) {
  if (!clique.contains(v1)) throw InputError("contract_clique: v1 must lie in the clique");
  const VertexSet keep = g.vertices() - clique.without(v1);
  VertexSet outside;
  clique.for_each([&](Vertex v) { outside |= g.neighbors(v); });
  outside -= clique;
  GraphBuilder b(keep.size());
  const Vertex w = index_in(keep, v1);
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) b.add_edge(index_in(keep, u), index_in(keep, v));
  outside.for_each([&](Vertex u) { b.add_edge(w, index_in(keep, u)); });
  keep.for_each([&](Vertex v) { b.set_label(index_in(keep, v), g.label(v)); });
  return b.build();
}

namespace {

Vertex default_v1(const Graph& g, VertexSet clique) {
  std::optional<Vertex> pick;
  clique.for_each([&](Vertex u) {
    if (pick) return;
    const VertexSet mine = g.neighbors(u) - clique;
    bool covers = true;
    clique.for_each([&](Vertex w) { covers = covers && (g.neighbors(w) - clique).subset_of(mine); });
    if (covers) pick = u;
  });
  return pick.value_or(clique.first());
}

}  // namespace

ContractionSplit contract_clique_split(const Graph& g, VertexSet clique, const SetFamily& family,
                                       const ContractionOptions& opts) {
  if (!clique.subset_of(g.vertices()) || clique.size() < 2 || !g.is_clique(clique))
    throw InputError("contract_clique_split: H must be a clique on at least two vertices");
  require_family(g, family, "contract_clique_split");
  const Vertex v1 = opts.v1.value_or(default_v1(g, clique));
  if (!clique.contains(v1)) throw InputError("contract_clique_split: v1 must lie in the clique");
  const unsigned r = family.r;

  ContractionSplit out;
  out.v1 = v1;
  out.others = clique.without(v1).members();
  out.contracted = contract_clique(g, clique, v1);
  out.contracted_vertices = g.vertices() - clique.without(v1);

  auto contract = [&](VertexSet a) {
    const VertexSet hit = a & clique;
    return hit.empty() ? a : (a - hit).with(v1);
  };
  auto in_quotient = [&](VertexSet s) {
    return s.size() == r && s.subset_of(out.contracted_vertices) &&
           out.contracted.is_independent(compact(s, out.contracted_vertices));
  };

  std::vector<VertexSet> b;
  for (VertexSet a : family)
    if (in_quotient(contract(a))) b.push_back(contract(a));
  out.b = make_family(r, b, "B");

  std::vector<VertexSet> d_all;
  for (Vertex vi : out.others) {
    std::vector<VertexSet> c, d, e;
    for (VertexSet a : family) {
      if (a.contains(v1)) {
        const VertexSet rest = a.without(v1);
        if (family.contains(rest.with(vi))) c.push_back(rest);
        if (g.neighbors(vi).intersects(rest)) d.push_back(a);
      }
      if (a.contains(vi) && g.neighbors(v1).intersects(a.without(vi))) e.push_back(a);
    }
    d_all.insert(d_all.end(), d.begin(), d.end());
    out.c.push_back(make_family(r - 1, c, "C"));
    out.d.push_back(make_family(r, d, "D"));
    out.e.push_back(make_family(r, e, "E"));
  }
  out.d_union = make_family(r, d_all).size();

  std::size_t total = out.b.size() + out.d_union;
  for (std::size_t k = 0; k < out.others.size(); ++k) total += out.c[k].size() + out.e[k].size();

  ensure(is_intersecting(out.b), "B is not intersecting");
  const VertexSet outside_h = g.vertices() - clique;
  for (const auto& c : out.c) {
    ensure(is_intersecting(c), "a C family is not intersecting");
    for (VertexSet s : c) ensure(s.subset_of(outside_h) && g.is_independent(s), "C set outside G - H");
  }

  if (total != family.size()) {
    const std::string counts = "|A| = " + std::to_string(family.size()) + " but the parts sum to " + std::to_string(total);
    // A member through vj whose remainder meets N(vj) - N(v1) vanishes from B without entering any D or E.
    for (VertexSet a : family) {
      if (in_quotient(contract(a))) continue;
      bool placed = std::any_of(out.d.begin(), out.d.end(), [&](const SetFamily& f) { return f.contains(a); }) ||
                    std::any_of(out.e.begin(), out.e.end(), [&](const SetFamily& f) { return f.contains(a); });
      if (!placed)
        throw InputError("contract_clique_split: " + counts + "; member " + a.hex() +
                         " meets a neighbour of a clique vertex that is not a neighbour of v1");
    }
    if (opts.non_maximal) throw InputError("contract_clique_split: " + counts + " for a non-maximum family");
    throw InternalError("contract_clique_split: " + counts);
  }
  return out;
}

std::vector<VertexSet> claim_cl_violations(const Graph& g, VertexSet clique, Vertex v1, const SetFamily& family) {
  if (!clique.contains(v1) || !g.is_clique(clique)) throw InputError("claim_cl_violations: bad clique or v1");
  const VertexSet keep = g.vertices() - clique.without(v1);
  const Graph quotient = contract_clique(g, clique, v1);
  std::vector<VertexSet> out;
  const VertexSet others = clique.without(v1);
  for (VertexSet m : family) {
    const VertexSet hit = m & others;
    if (hit.empty()) continue;
    const Vertex vi = hit.first();
    const VertexSet core = m.without(vi);
    const VertexSet target = core.with(v1);
    if (!target.subset_of(keep) || !quotient.is_independent(compact(target, keep))) continue;
    bool twin = false;
    others.without(vi).for_each([&](Vertex vj) { twin = twin || family.contains(core.with(vj)); });
    if (twin && !family.contains(target)) out.push_back(m);
  }
  return out;
}

LadderReplay replay_ladder_decomposition(unsigned n, const SetFamily& family) {
  if (n < 4) throw InputError("replay_ladder_decomposition: n must be at least 4");
  if (family.r != 3) throw InputError("replay_ladder_decomposition: family must be 3-uniform");
  const Graph g = make_ladder(n);
  require_family(g, family, "replay_ladder_decomposition");

  const Vertex xn = ladder_x(n), yn = ladder_y(n);
  const Vertex xn1 = ladder_x(n - 1), yn1 = ladder_y(n - 1);
  const Vertex xn2 = ladder_x(n - 2), yn2 = ladder_y(n - 2);
  const VertexSet z{xn2, yn2, xn1, yn1, xn, yn};
  const VertexSet prev = VertexSet::range(2 * (n - 1));
  const VertexSet prev2 = VertexSet::range(2 * (n - 2));
  const Graph g1 = make_ladder(n - 1);

  auto fold = [&](VertexSet a) {
    VertexSet out = a - VertexSet{xn, yn};
    if (a.contains(xn)) out.insert(xn1);
    if (a.contains(yn)) out.insert(yn1);
    return out;
  };

  LadderReplay rep;
  rep.n = n;
  std::vector<VertexSet> b, c1, c2;
  std::array<std::vector<VertexSet>, 6> d;
  const std::array<VertexSet, 4> d_patterns{VertexSet{xn2, xn}, VertexSet{yn2, yn}, VertexSet{xn1, yn},
                                            VertexSet{yn1, xn}};
  const VertexSet d5{xn2, yn1, xn}, d6{yn2, xn1, yn};
  for (VertexSet a : family) {
    const VertexSet f = fold(a);
    if (f.size() == 3 && f.subset_of(prev) && g1.is_independent(f)) b.push_back(f);
    if (a.contains(xn) && family.contains(a.without(xn).with(xn1))) c1.push_back(a.without(xn));
    if (a.contains(yn) && family.contains(a.without(yn).with(yn1))) c2.push_back(a.without(yn));
    for (std::size_t k = 0; k < 4; ++k)
      if ((a & z) == d_patterns[k]) d[k].push_back(a);
    if (a == d5) d[4].push_back(a);
    if (a == d6) d[5].push_back(a);
  }
  rep.b = make_family(3, b, "B");
  rep.c1 = make_family(2, c1, "C1");
  rep.c2 = make_family(2, c2, "C2");
  for (std::size_t k = 0; k < 6; ++k) rep.d[k] = make_family(3, d[k], "D" + std::to_string(k + 1));

  std::vector<VertexSet> e = c1, f = c2;
  for (VertexSet a : rep.d[0]) e.push_back(a.without(xn));
  for (VertexSet a : rep.d[1]) f.push_back(a.without(yn));
  rep.e = make_family(2, e, "E");
  rep.f = make_family(2, f, "F");

  std::size_t sum_d = 0, sum_d36 = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    sum_d += rep.d[k].size();
    if (k >= 2) sum_d36 += rep.d[k].size();
  }
  ensure(family.size() == rep.b.size() + rep.c1.size() + rep.c2.size() + sum_d, "ladder split does not add up");
  ensure(family.size() == rep.b.size() + rep.e.size() + rep.f.size() + sum_d36, "ladder regrouping does not add up");
  ensure(rep.e.size() == rep.c1.size() + rep.d[0].size(), "E is not a disjoint union");
  ensure(rep.f.size() == rep.c2.size() + rep.d[1].size(), "F is not a disjoint union");
  ensure(is_intersecting(rep.e) && is_intersecting(rep.f), "E or F is not intersecting");
  for (const SetFamily* fam : {&rep.e, &rep.f})
    for (VertexSet s : *fam) ensure(s.subset_of(prev2) && g.is_independent(s), "E or F leaves the smaller ladder");

  rep.star_n = star_size(g, 0, 3);
  rep.star_n1 = star_size(g1, 0, 3);
  rep.star_n2_r2 = star_size(make_ladder(n - 2), 0, 2);
  ensure(rep.star_n >= rep.star_n1 + 2 * rep.star_n2_r2 + 2, "ladder star inequality fails");
  return rep;
}

bool lemma_l1_holds(const Graph& g, Vertex x, unsigned r) {
  require_vertex(g, x, "lemma_l1_holds");
  if (g.degree(x) != 0) throw InputError("lemma_l1_holds: x must be isolated");
  const auto sx = star_size(g, x, r);
  for (Vertex v = 0; v < g.order(); ++v)
    if (star_size(g, v, r) > sx) return false;
  return true;
}

bool lemma_l2_holds(const Graph& g, Vertex v1, Vertex v2) {
  require_vertex(g, v1, "lemma_l2_holds");
  require_vertex(g, v2, "lemma_l2_holds");
  if (v1 == v2 || !g.closed_neighborhood(v1).subset_of(g.closed_neighborhood(v2)))
    throw InputError("lemma_l2_holds: need N[v1] ⊆ N[v2] with v1 ≠ v2");
  const unsigned m = mu(g);
  return mu(delete_vertex(g, v2)) >= m && mu(delete_closed_neighborhood(g, v2)) + 1 >= m;
}

StarSplitCounts star_split_counts(const Graph& g, Vertex x, Vertex v, unsigned r) {
  require_vertex(g, x, "star_split_counts");
  require_vertex(g, v, "star_split_counts");
  if (g.degree(x) != 0 || x == v) throw InputError("star_split_counts: x must be isolated and differ from v");
  StarSplitCounts c;
  c.whole = star_size(g, x, r);
  c.deleted = star_in(g, g.vertices().without(v), x, r);
  c.reduced = star_in(g, g.vertices() - g.closed_neighborhood(v), x, r - 1);
  ensure(c.whole == c.deleted + c.reduced, "star at an isolated vertex does not split");
  return c;
}

CompressionBound compression_bound(const Graph& g, const SetFamily& family, Vertex x, Vertex v1, Vertex vi) {
  const CompressionSplit split = compress_family(g, family, v1, vi);
  const StarSplitCounts stars = star_split_counts(g, x, vi, family.r);
  CompressionBound out;
  out.family = family.size();
  out.kept = split.kept.size();
  out.reduced = split.reduced.size();
  out.kept_star = stars.deleted;
  out.reduced_star = stars.reduced;
  out.star = stars.whole;
  return out;
}

}  // namespace ekr
