#include "ekr/independence.hpp"

#include <algorithm>

namespace ekr {

bool SetFamily::contains(VertexSet s) const { return std::binary_search(sets.begin(), sets.end(), s); }

void SetFamily::canonicalize() {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

SetFamily make_family(unsigned r, std::vector<VertexSet> sets, std::string origin) {
  SetFamily f{r, std::move(sets), std::move(origin)};
  f.canonicalize();
  return f;
}

bool is_intersecting(std::span<const VertexSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) return false;
  return true;
}

VertexSet common_intersection(std::span<const VertexSet> sets, VertexSet universe) {
  for (auto s : sets) universe &= s;
  return universe;
}

bool is_independent_family(const Graph& g, const SetFamily& f) {
  std::vector<VertexSet> sorted = f.sets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return std::all_of(f.begin(), f.end(), [&](VertexSet s) {
    return s.size() == f.r && s.subset_of(g.vertices()) && g.is_independent(s);
  });
}

namespace {

void enumerate_rec(const Graph& g, VertexSet candidates, VertexSet current, unsigned need,
                   std::vector<VertexSet>& out) {
  if (need == 0) {
    out.push_back(current);
    return;
  }
  while (candidates.size() >= need) {
    const Vertex v = candidates.first();
    candidates.erase(v);
    enumerate_rec(g, candidates - g.neighbors(v), current.with(v), need - 1, out);
  }
}

std::uint64_t count_rec(const Graph& g, VertexSet candidates, unsigned need) {
  if (need == 0) return 1;
  std::uint64_t total = 0;
  while (candidates.size() >= need) {
    if (need == 1) return total + candidates.size();
    const Vertex v = candidates.first();
    candidates.erase(v);
    total += count_rec(g, candidates - g.neighbors(v), need - 1);
  }
  return total;
}

}  // namespace

SetFamily enumerate_independent(const Graph& g, unsigned r) {
  SetFamily f{r, {}, "J^" + std::to_string(r)};
  enumerate_rec(g, g.vertices(), {}, r, f.sets);
  std::sort(f.sets.begin(), f.sets.end());
  return f;
}

SetFamily star(const Graph& g, Vertex v, unsigned r) {
  if (v >= g.order()) throw InputError("star centre " + std::to_string(v) + " out of range");
  SetFamily f{r, {}, "star:" + g.label(v)};
  if (r >= 1) enumerate_rec(g, g.vertices() - g.closed_neighborhood(v), VertexSet::single(v), r - 1, f.sets);
  std::sort(f.sets.begin(), f.sets.end());
  return f;
}

std::uint64_t count_independent(const Graph& g, unsigned r, VertexSet within) {
  return count_rec(g, within & g.vertices(), r);
}

std::uint64_t star_size(const Graph& g, Vertex v, unsigned r) {
  if (v >= g.order()) throw InputError("star centre " + std::to_string(v) + " out of range");
  if (r == 0) return 0;
  return count_rec(g, g.vertices() - g.closed_neighborhood(v), r - 1);
}

std::vector<std::uint64_t> star_sizes(const Graph& g, unsigned r) {
  std::vector<std::uint64_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = star_size(g, v, r);
  return out;
}

BestStar best_star(const Graph& g, unsigned r) {
  BestStar best;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto s = star_size(g, v, r);
    if (!best.center || s > best.size) best = {v, s};
  }
  return best;
}

namespace {

struct MuSearch {
  const Graph& g;
  VertexSet all;
  unsigned best;

  void run(unsigned chosen, VertexSet dominated) {
    if (dominated == all) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + 1 >= best) return;
    // Branch on the undominated vertex with the fewest ways to become dominated.
    Vertex pivot = 0;
    unsigned fewest = ~0U;
    (all - dominated).for_each([&](Vertex u) {
      const unsigned ways = (g.closed_neighborhood(u) - dominated).size();
      if (ways < fewest) {
        fewest = ways;
        pivot = u;
      }
    });
    (g.closed_neighborhood(pivot) - dominated).for_each([&](Vertex w) {
      run(chosen + 1, dominated | g.closed_neighborhood(w));
    });
  }
};

struct AlphaSearch {
  const Graph& g;
  unsigned best = 0;

  void run(VertexSet candidates, unsigned size) {
    if (candidates.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + candidates.size() <= best) return;
    Vertex pivot = candidates.first();
    unsigned most = 0;
    bool isolated_found = false;
    candidates.for_each([&](Vertex v) {
      const unsigned d = (g.neighbors(v) & candidates).size();
      if (d == 0 && !isolated_found) {
        isolated_found = true;
        pivot = v;
      }
      if (!isolated_found && d > most) {
        most = d;
        pivot = v;
      }
    });
    run(candidates - g.closed_neighborhood(pivot), size + 1);
    // An isolated candidate is always worth taking.
    if (!isolated_found) run(candidates.without(pivot), size);
  }
};

}  // namespace

unsigned mu(const Graph& g) {
  MuSearch s{g, g.vertices(), g.order()};
  if (g.order() == 0) return 0;
  s.best = g.order() + 1;
  s.run(0, {});
  return s.best;
}

unsigned alpha(const Graph& g) {
  AlphaSearch s{g};
  s.run(g.vertices(), 0);
  return s.best;
}

}  // namespace ekr
