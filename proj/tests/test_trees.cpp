#include <doctest.h>

#include <set>

#include "ekr/generators.hpp"
#include "ekr/trees.hpp"
#include "support.hpp"

using namespace ekr;

TEST_CASE("non-isomorphic tree counts") {
  const std::vector<std::size_t> expect{1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (unsigned n = 1; n < expect.size(); ++n) {
    INFO("n=" << n);
    const auto trees = nonisomorphic_trees(n);
    CHECK(trees.size() == expect[n]);
    std::set<std::string> forms;
    for (const Graph& t : trees) {
      CHECK(is_tree(t));
      CHECK(t.order() == n);
      forms.insert(canonical_tree_form(t));
    }
    CHECK(forms.size() == trees.size());
  }
}

TEST_CASE("labelled trees collapse onto the canonical classes") {
  for (unsigned n = 2; n <= 8; ++n) {
    std::set<std::string> forms;
    for_each_prufer_sequence(n, false, [&](const std::vector<Vertex>& seq) { forms.insert(canonical_tree_form(make_tree_from_prufer(seq))); });
    std::set<std::string> expect;
    for (const Graph& t : nonisomorphic_trees(n)) expect.insert(canonical_tree_form(t));
    CHECK(forms == expect);
  }
}

TEST_CASE("canonical form is invariant and reproducible") {
  oracle::Rng rng(81);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 2 + iter % 14;
    std::vector<Vertex> seq(n - 2);
    for (auto& s : seq) s = static_cast<Vertex>(rng() % n);
    const Graph t = make_tree_from_prufer(seq);
    const std::string form = canonical_tree_form(t);
    CHECK(canonical_tree_form(oracle::permuted(t, rng)) == form);
    const Graph back = tree_from_canonical_form(form);
    CHECK(back.order() == n);
    CHECK(canonical_tree_form(back) == form);
  }
  CHECK_THROWS_AS(tree_from_canonical_form("()()"), InputError);
  CHECK_THROWS_AS(tree_from_canonical_form("(x)"), InputError);
  CHECK_THROWS_AS(canonical_tree_form(make_cycle(4)), InputError);
}

TEST_CASE("Prüfer sequence order") {
  std::vector<std::vector<Vertex>> fwd, rev;
  for_each_prufer_sequence(4, false, [&](const std::vector<Vertex>& s) { fwd.push_back(s); });
  for_each_prufer_sequence(4, true, [&](const std::vector<Vertex>& s) { rev.push_back(s); });
  CHECK(fwd.size() == 16);
  CHECK(std::is_sorted(fwd.begin(), fwd.end()));
  std::reverse(rev.begin(), rev.end());
  CHECK(fwd == rev);
  std::size_t two = 0;
  for_each_prufer_sequence(2, false, [&](const std::vector<Vertex>& s) { two += s.empty(); });
  CHECK(two == 1);
}

TEST_CASE("tree predicate") {
  CHECK(is_tree(make_path(5)));
  CHECK(is_tree(make_empty(1)));
  CHECK_FALSE(is_tree(make_cycle(5)));
  CHECK_FALSE(is_tree(make_empty(2)));
  CHECK_THROWS_AS(prufer_encode(make_cycle(4)), InputError);
}
