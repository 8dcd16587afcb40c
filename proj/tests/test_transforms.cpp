#include <doctest.h>

#include "albertson/families.hpp"
#include "albertson/isomorphism.hpp"
#include "albertson/random_graphs.hpp"
#include "albertson/transforms.hpp"
#include "oracles.hpp"

using namespace albertson;

TEST_CASE("subdivide_edge") {
  const Graph c4 = subdivide_edge(make_named_graph(NamedGraph::cycle, 3), 0, 1);
  CHECK(are_isomorphic(c4, make_named_graph(NamedGraph::cycle, 4)));

  const Graph p3 = subdivide_edge(make_named_graph(NamedGraph::path, 2), 0, 1);
  CHECK(p3.order() == 3);
  CHECK(p3.degree(2) == 2);
  CHECK(are_isomorphic(p3, make_named_graph(NamedGraph::path, 3)));

  const Graph h = subdivide_edge(make_named_graph(NamedGraph::complete, 5), 0, 1);
  CHECK(h.order() == 6);
  CHECK_FALSE(h.has_edge(0, 1));
  CHECK(h.has_edge(0, 5));
  CHECK(h.has_edge(5, 1));
  CHECK(h.size() == 11);

  CHECK_THROWS_AS(subdivide_edge(make_named_graph(NamedGraph::path, 3), 0, 2), PreconditionError);
}

TEST_CASE("degree-3 subdivision adds 10") {
  const Graph prism = make_named_graph(NamedGraph::prism, 3);
  const Graph once = apply_transformation1(prism, 0, 1);
  CHECK(oracle::index_of(once) == 10);
  // Edge (3,4) on the inner cycle is still (3,3).
  const Graph twice = apply_transformation1(once, 3, 4);
  CHECK(oracle::index_of(twice) == 20);

  Graph k4 = subdivide_edge(make_named_graph(NamedGraph::complete, 4), 0, 1);
  CHECK(k4.degree(4) == 2);
  CHECK_FALSE(transformation1_applies(k4, 0, 4));
  CHECK(transformation1_applies(k4, 2, 3));
  const Index before = oracle::index_of(k4);
  CHECK(oracle::index_of(apply_transformation1(k4, 2, 3)) == before + 10);

  CHECK_THROWS_AS(apply_transformation1(k4, 0, 4), PreconditionError);
  CHECK_THROWS_AS(apply_transformation1(make_named_graph(NamedGraph::complete, 5), 0, 1),
                  PreconditionError);
}

TEST_CASE("neutral subdivision keeps the index") {
  const Graph p3 = make_named_graph(NamedGraph::path, 3);
  for (Edge e : p3.edges()) {
    const Graph p4 = neutral_subdivide(p3, e.first, e.second);
    CHECK(oracle::index_of(p4) == 6);
  }
  CHECK(oracle::index_of(neutral_subdivide(make_named_graph(NamedGraph::cycle, 4), 1, 2)) == 0);

  const Graph hp = construct_h_prime();
  CHECK(oracle::index_of(neutral_subdivide(hp, 5, 6)) == 22);

  // K2 (degrees 1,1) and a (3,3) edge fail both conditions.
  CHECK_THROWS_AS(neutral_subdivide(make_named_graph(NamedGraph::path, 2), 0, 1), PreconditionError);
  CHECK_THROWS_AS(neutral_subdivide(make_named_graph(NamedGraph::prism, 3), 0, 1), PreconditionError);
  // A pendant on a degree-3 vertex qualifies.
  CHECK(neutral_subdivision_applies(make_named_graph(NamedGraph::star, 4), 0, 1));
}

TEST_CASE("random applications obey both laws") {
  Rng rng(99);
  std::size_t t1 = 0;
  std::size_t neutral = 0;
  while (t1 < 500 || neutral < 500) {
    const auto n = std::uniform_int_distribution<std::size_t>(4, 30)(rng);
    const Graph g = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                        ? random_subcubic(n, rng)
                        : random_gnp(n, 2.0 / static_cast<double>(n), rng);
    const Index before = oracle::index_of(g);
    for (auto [u, v] : g.edges()) {
      if (transformation1_applies(g, u, v)) {
        CHECK(oracle::index_of(apply_transformation1(g, u, v)) - before == 10);
        ++t1;
      }
      if (neutral_subdivision_applies(g, u, v)) {
        CHECK(oracle::index_of(neutral_subdivide(g, u, v)) == before);
        ++neutral;
      }
    }
  }
}

TEST_CASE("subdivision preserves connectivity") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_tree(std::uniform_int_distribution<std::size_t>(2, 20)(rng), rng);
    const auto edges = g.edges();
    const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    CHECK(is_connected(subdivide_edge(g, e.first, e.second)));
  }
}
