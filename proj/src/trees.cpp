#include "ekr/trees.hpp"

#include <algorithm>
#include <set>

namespace ekr {

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == g.order() && connected_components(g).size() == 1;
}

std::vector<Vertex> prufer_encode(const Graph& tree) {
  if (tree.order() < 2 || !is_tree(tree)) throw InputError("prufer_encode: need a tree on at least 2 vertices");
  const Vertex n = tree.order();
  std::vector<unsigned> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = tree.degree(v);
  VertexSet removed;
  std::vector<Vertex> code;
  for (Vertex step = 0; step + 2 < n; ++step) {
    Vertex leaf = 0;
    while (removed.contains(leaf) || deg[leaf] != 1) ++leaf;
    const Vertex nb = (tree.neighbors(leaf) - removed).first();
    code.push_back(nb);
    removed.insert(leaf);
    --deg[nb];
  }
  return code;
}

void for_each_prufer_sequence(unsigned n, bool reverse, const std::function<void(const std::vector<Vertex>&)>& visit) {
  if (n < 2) throw InputError("Prüfer sequences need n ≥ 2");
  const Vertex top = n - 1;
  std::vector<Vertex> seq(n - 2, reverse ? top : 0);
  while (true) {
    visit(seq);
    std::size_t k = seq.size();
    while (k > 0) {
      --k;
      if (!reverse && seq[k] < top) {
        ++seq[k];
        std::fill(seq.begin() + static_cast<std::ptrdiff_t>(k) + 1, seq.end(), 0);
        break;
      }
      if (reverse && seq[k] > 0) {
        --seq[k];
        std::fill(seq.begin() + static_cast<std::ptrdiff_t>(k) + 1, seq.end(), top);
        break;
      }
      if (k == 0) return;
    }
    if (seq.empty()) return;
  }
}

namespace {

std::string encode_rooted(const Graph& t, Vertex v, VertexSet seen) {
  seen.insert(v);
  std::vector<std::string> kids;
  (t.neighbors(v) - seen).for_each([&](Vertex c) { kids.push_back(encode_rooted(t, c, seen.with(c))); });
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  return out + ")";
}

std::vector<Vertex> centres(const Graph& t) {
  VertexSet alive = t.vertices();
  while (alive.size() > 2) {
    VertexSet leaves;
    alive.for_each([&](Vertex v) {
      if ((t.neighbors(v) & alive).size() <= 1) leaves.insert(v);
    });
    alive -= leaves;
  }
  return alive.members();
}

}  // namespace

std::string canonical_tree_form(const Graph& tree) {
  if (!is_tree(tree)) throw InputError("canonical_tree_form: graph is not a tree");
  std::string best;
  for (Vertex c : centres(tree)) {
    std::string s = encode_rooted(tree, c, {});
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

Graph tree_from_canonical_form(const std::string& form) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (std::size_t k = 0; k < form.size(); ++k) {
    const char ch = form[k];
    if (ch == '(') {
      if (next >= kMaxVertices) throw CapacityError("tree form has more than 64 vertices");
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else if (ch == ')') {
      if (stack.empty()) throw InputError("unbalanced tree form");
      stack.pop_back();
    } else {
      throw InputError("tree form may only contain brackets");
    }
    if (stack.empty() && k + 1 < form.size()) throw InputError("tree form has more than one root");
  }
  if (!stack.empty() || next == 0) throw InputError("unbalanced tree form");
  return Graph::from_edges(next, edges);
}

std::vector<Graph> nonisomorphic_trees(unsigned n) {
  if (n == 0) return {};
  if (n > kMaxVertices) throw CapacityError("trees above 64 vertices are not supported");
  // Rooted trees as canonical level sequences, each folded to its free-tree form.
  std::vector<unsigned> level(n);
  for (unsigned i = 0; i < n; ++i) level[i] = i;
  std::set<std::string> forms;
  while (true) {
    std::vector<Edge> edges;
    for (unsigned i = 1; i < n; ++i) {
      unsigned j = i;
      while (level[--j] != level[i] - 1) {}
      edges.emplace_back(j, i);
    }
    forms.insert(canonical_tree_form(Graph::from_edges(n, edges)));
    unsigned p = n;
    for (unsigned i = n; i-- > 1;)
      if (level[i] > 1) {
        p = i;
        break;
      }
    if (p == n) break;
    unsigned q = p;
    while (level[--q] != level[p] - 1) {}
    for (unsigned i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(tree_from_canonical_form(f));
  return out;
}

}  // namespace ekr
