#include <doctest.h>

#include "albertson/isomorphism.hpp"
#include "albertson/random_graphs.hpp"

using namespace albertson;

TEST_CASE("basic isomorphism cases") {
  const Graph p4 = make_named_graph(NamedGraph::path, 4);
  const std::vector<Vertex> perm{2, 0, 3, 1};
  CHECK(are_isomorphic(p4, p4.permuted(perm)));
  CHECK_FALSE(are_isomorphic(p4, make_named_graph(NamedGraph::star, 4)));

  const Graph c6 = make_named_graph(NamedGraph::cycle, 6);
  const Graph two_triangles =
      Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(are_isomorphic(c6, two_triangles));
  CHECK_FALSE(are_isomorphic(Graph(3), Graph(4)));
  CHECK(are_isomorphic(Graph(0), Graph(0)));
}

TEST_CASE("regular graphs that refinement cannot split") {
  // The prism on 6 vertices and K_{3,3} are both cubic on 6 vertices.
  const Graph prism = make_named_graph(NamedGraph::prism, 3);
  Graph k33(6);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) k33.add_edge(a, b);
  CHECK_FALSE(are_isomorphic(prism, k33));
  CHECK(are_isomorphic(k33, k33.permuted(std::vector<Vertex>{5, 1, 3, 0, 4, 2})));

  // Cube and Wagner graph: cubic on 8 vertices, only one is bipartite.
  const Graph cube = make_named_graph(NamedGraph::prism, 4);
  Graph moebius = make_named_graph(NamedGraph::cycle, 8);
  for (Vertex i = 0; i < 4; ++i) moebius.add_edge(i, i + 4);
  CHECK_FALSE(are_isomorphic(cube, moebius));
}

TEST_CASE("the returned map is an isomorphism") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
    const Graph g = random_gnp(n, 0.4, rng);
    const Graph h = g.permuted(random_permutation(n, rng));
    auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge((*map)[u], (*map)[v]));
  }
}

TEST_CASE("reflexive, symmetric, and permutation-invariant") {
  Rng rng(5);
  std::vector<Graph> pool;
  for (int k = 0; k < 30; ++k) {
    pool.push_back(random_gnp(std::uniform_int_distribution<std::size_t>(4, 9)(rng), 0.5, rng));
  }
  for (const Graph& g : pool) {
    CHECK(are_isomorphic(g, g));
    CHECK(are_isomorphic(g, g.permuted(random_permutation(g.order(), rng))));
  }
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b)
      CHECK(are_isomorphic(pool[a], pool[b]) == are_isomorphic(pool[b], pool[a]));
}

TEST_CASE("symmetric cubic graphs at n = 16") {
  Rng rng(9);
  const Graph g = make_named_graph(NamedGraph::prism, 8);
  CHECK(are_isomorphic(g, g.permuted(random_permutation(16, rng))));
}
