#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

/// Prüfer code of a labelled tree on n ≥ 2 vertices. InputError if g is not a tree.
std::vector<Vertex> prufer_encode(const Graph& tree);

/// Visits all n^(n-2) Prüfer sequences over {0..n-1} in lexicographic order,
/// or in reverse lexicographic order. n ≥ 2.
void for_each_prufer_sequence(unsigned n, bool reverse, const std::function<void(const std::vector<Vertex>&)>& visit);

bool is_tree(const Graph& g);

/// Isomorphism invariant that separates non-isomorphic trees: nested-bracket
/// encoding rooted at the centre (the smaller encoding for two centres).
std::string canonical_tree_form(const Graph& tree);

/// Tree whose preorder numbering follows the canonical form.
Graph tree_from_canonical_form(const std::string& form);

/// One tree per isomorphism class, in canonical-form order, each labelled by
/// tree_from_canonical_form.
std::vector<Graph> nonisomorphic_trees(unsigned n);

}  // namespace ekr
