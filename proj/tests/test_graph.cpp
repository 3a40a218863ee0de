#include <doctest.h>

#include <sstream>

#include "ekr/generators.hpp"
#include "ekr/graph.hpp"
#include "ekr/independence.hpp"
#include "support.hpp"

using namespace ekr;

TEST_CASE("delete_vertex examples") {
  SUBCASE("path minus a leaf is a shorter path") {
    const Graph g = delete_vertex(make_path(4), 3);
    CHECK(oracle::sorted_edges(g) == oracle::sorted_edges(make_path(3)));
  }
  SUBCASE("complete graph minus any vertex") {
    for (Vertex v = 0; v < 4; ++v) CHECK(oracle::sorted_edges(delete_vertex(make_complete(4), v)) == oracle::sorted_edges(make_complete(3)));
  }
  SUBCASE("cycle minus a vertex is a path") {
    const Graph c5 = make_cycle(5);
    for (Vertex v = 0; v < 5; ++v) {
      const Graph g = delete_vertex(c5, v);
      CHECK(g.order() == 4);
      // Remaining vertices in cyclic order from v+1 form the path.
      std::vector<Vertex> seq;
      for (Vertex i = 1; i < 5; ++i) seq.push_back(g.vertex_by_label(std::to_string((v + i) % 5)));
      CHECK(g.edge_count() == 3);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(g.adjacent(seq[i], seq[i + 1]));
    }
  }
  SUBCASE("labels survive") {
    const Graph g = delete_vertex(make_path(4), 1);
    CHECK(g.labels() == std::vector<std::string>{"0", "2", "3"});
  }
  CHECK_THROWS_AS(delete_vertex(make_path(3), 3), InputError);
}

TEST_CASE("delete_closed_neighborhood examples") {
  CHECK(delete_closed_neighborhood(make_complete(4), 2).order() == 0);

  const Graph p4 = make_path(4);  // 1-2-3-4 is 0-1-2-3
  const Graph g = delete_closed_neighborhood(p4, 1);
  CHECK(g.order() == 1);
  CHECK(g.label(0) == "3");

  SUBCASE("ladder corner") {
    const Graph l3 = make_ladder(3);
    const Vertex x1 = ladder_x(1);
    // Oracle: the survivors are the vertices outside N[x1].
    std::vector<std::string> expect;
    for (Vertex v = 0; v < l3.order(); ++v)
      if (v != x1 && !l3.adjacent(v, x1)) expect.push_back(l3.label(v));
    const Graph h = delete_closed_neighborhood(l3, x1);
    CHECK(h.labels() == expect);
    CHECK(expect == std::vector<std::string>{"y2", "x3", "y3"});
    CHECK(h.edge_count() == 2);  // y2-y3 and x3-y3
  }
  CHECK_THROWS_AS(delete_closed_neighborhood(p4, 9), InputError);
}

TEST_CASE("disjoint_union examples") {
  const Graph k3e1[] = {make_complete(3), make_empty(1)};
  const Graph g = disjoint_union(k3e1);
  CHECK(g.order() == 4);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_count() == 3);
  CHECK(g.label(3) == "1.0");

  CHECK(disjoint_union(std::span<const Graph>{}).order() == 0);

  const Graph p2p2[] = {make_path(2), make_path(2)};
  const Graph two_k2 = disjoint_union(p2p2);
  CHECK(mu(two_k2) == oracle::mu(two_k2));
  CHECK(mu(two_k2) == 2);

  const Graph big[] = {make_complete(40), make_complete(30)};
  CHECK_THROWS_AS(disjoint_union(big), CapacityError);
}

TEST_CASE("degree examples") {
  CHECK(degree(make_complete(5), 0) == 4);
  CHECK(degree(make_empty(7), 6) == 0);
  const Graph l4 = make_ladder(4);
  CHECK(degree(l4, ladder_x(2)) == 3);
  CHECK_THROWS_AS(degree(l4, 8), InputError);
}

TEST_CASE("construction errors") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InputError);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), InputError);
  const Edge out[] = {{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, out), InputError);
  CHECK_THROWS_AS(Graph(65), CapacityError);
  CHECK_THROWS_AS(Graph::from_edges(2, {}, {"a", "a"}), InputError);
}

TEST_CASE("graph invariants on random graphs") {
  oracle::Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Vertex n = 1 + iter % 12;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(g.neighbors(v).subset_of(g.vertices()));
      CHECK_FALSE(g.adjacent(v, v));
      for (Vertex u = 0; u < n; ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      CHECK(delete_closed_neighborhood(g, v).order() == delete_vertex(g, v).order() - g.degree(v));
    }
  }
}

TEST_CASE("deleting by label is independent of the vertex numbering") {
  oracle::Rng rng(12);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = oracle::random_graph(8, 0.4, rng);
    const Graph h = oracle::permuted(g, rng);
    const std::string victim = std::to_string(iter % 8);
    for (bool closed : {false, true}) {
      const Graph a = closed ? delete_closed_neighborhood(g, g.vertex_by_label(victim)) : delete_vertex(g, g.vertex_by_label(victim));
      const Graph b = closed ? delete_closed_neighborhood(h, h.vertex_by_label(victim)) : delete_vertex(h, h.vertex_by_label(victim));
      REQUIRE(a.order() == b.order());
      for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < a.order(); ++v)
          CHECK(a.adjacent(u, v) == b.adjacent(b.vertex_by_label(a.label(u)), b.vertex_by_label(a.label(v))));
    }
  }
}

TEST_CASE("disjoint union edge count is additive") {
  oracle::Rng rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Graph> parts;
    std::size_t edges = 0;
    for (int i = 0; i < 1 + iter % 4; ++i) {
      parts.push_back(oracle::random_graph(1 + (iter + i) % 7, 0.5, rng));
      edges += parts.back().edge_count();
    }
    const Graph u = disjoint_union(parts);
    CHECK(u.edge_count() == edges);
    CHECK(connected_components(u).size() >= parts.size());
  }
}

TEST_CASE("edge list round trip and parse errors") {
  oracle::Rng rng(14);
  for (int iter = 0; iter < 30; ++iter) {
    const Graph g = oracle::random_graph(1 + iter % 10, 0.4, rng);
    std::stringstream s;
    write_edge_list(s, g);
    const Graph h = read_edge_list(s);
    CHECK(oracle::sorted_edges(h) == oracle::sorted_edges(g));
    CHECK(h.order() == g.order());
  }
  for (const char* bad : {"3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 1\n0 5\n", "3 2\n0 1\n", "x\n", "70 0\n"}) {
    std::stringstream s(bad);
    CHECK_THROWS(read_edge_list(s));
  }
}

TEST_CASE("compact and expand are inverse") {
  oracle::Rng rng(15);
  for (int iter = 0; iter < 1000; ++iter) {
    const VertexSet keep(rng());
    const VertexSet s = VertexSet(rng()) & keep;
    CHECK(expand(compact(s, keep), keep) == s);
    CHECK(compact(s, keep).size() == s.size());
  }
  CHECK(VertexSet{0, 3}.hex() == "0x9");
  CHECK(VertexSet{}.hex() == "0x0");
}

TEST_CASE("bipartite and components") {
  VertexSet side;
  CHECK(is_bipartite(make_ladder(5), &side));
  CHECK_FALSE(is_bipartite(make_cycle(5)));
  const Graph parts[] = {make_path(3), make_empty(2)};
  const auto comps = connected_components(disjoint_union(parts));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1, 2});
}
