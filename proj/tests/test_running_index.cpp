#include <doctest.h>

#include "albertson/random_graphs.hpp"
#include "albertson/running_index.hpp"
#include "oracles.hpp"

using namespace albertson;

namespace {

Index recomputed_delta(Graph g, Vertex u, Vertex v) {
  const Index before = oracle::index_of(g);
  g.add_edge(u, v);
  return oracle::index_of(g) - before;
}

}  // namespace

TEST_CASE("delta examples") {
  SUBCASE("closing P3 into a triangle") {
    const Graph p3 = make_named_graph(NamedGraph::path, 3);
    CHECK(addition_delta_formula(1, 1, 1, 1) == -6);
    CHECK(edge_addition_delta(p3, 0, 2) == -6);
    CHECK(recomputed_delta(p3, 0, 2) == -6);
  }
  SUBCASE("two isolated vertices") {
    CHECK(edge_addition_delta(Graph(2), 0, 1) == 0);
  }
  SUBCASE("star plus isolated vertex, either argument order") {
    Graph g = make_named_graph(NamedGraph::star, 4);
    const Vertex w = g.add_vertex();
    CHECK(modified_albertson(g) == 24);
    CHECK(edge_addition_delta(g, 0, w) == 36);
    CHECK(edge_addition_delta(g, w, 0) == 36);
    g.add_edge(0, w);
    CHECK(modified_albertson(g) == 60);
  }
  SUBCASE("preconditions") {
    const Graph p3 = make_named_graph(NamedGraph::path, 3);
    CHECK_THROWS_AS(edge_addition_delta(p3, 0, 1), PreconditionError);
    CHECK_THROWS_AS(edge_addition_delta(p3, 1, 1), PreconditionError);
    CHECK_THROWS_AS(edge_addition_delta(p3, 0, 7), InputError);
  }
}

TEST_CASE("delta equals recomputation and is even") {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 64)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0, 0.9)(rng), rng);
    Edge uv;
    if (!random_non_edge(g, rng, uv)) continue;
    const Index delta = edge_addition_delta(g, uv.first, uv.second);
    CHECK(delta == recomputed_delta(g, uv.first, uv.second));
    CHECK(delta % 2 == 0);
  }
}

TEST_CASE("insertions build known values") {
  SUBCASE("P3 from an edgeless graph") {
    RunningIndex ri(Graph(3));
    ri = insert_edge_tracked(ri, 0, 1);
    ri = insert_edge_tracked(ri, 1, 2);
    CHECK(ri.current() == 6);
  }
  SUBCASE("K5 one edge at a time") {
    RunningIndex ri(Graph(5));
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v) ri.insert_edge(u, v);
    CHECK(ri.current() == 0);
  }
  SUBCASE("S6 in random order") {
    Rng rng(8);
    std::vector<Vertex> leaves{1, 2, 3, 4, 5};
    for (int round = 0; round < 20; ++round) {
      std::shuffle(leaves.begin(), leaves.end(), rng);
      RunningIndex ri(Graph(6));
      for (Vertex leaf : leaves) ri.insert_edge(0, leaf);
      CHECK(ri.current() == 5 * (25 - 1));
    }
  }
}

TEST_CASE("deletions") {
  SUBCASE("triangle to path") {
    RunningIndex ri(make_named_graph(NamedGraph::cycle, 3));
    CHECK(ri.current() == 0);
    CHECK(ri.delete_edge(0, 1) == 6);
    CHECK(ri.current() == 6);
  }
  SUBCASE("K5 minus an edge") {
    Graph k5_minus = make_named_graph(NamedGraph::complete, 5);
    k5_minus.remove_edge(0, 1);
    const Index expected = oracle::index_of(k5_minus);  // 6 edges of |16 - 9|
    CHECK(expected == 42);
    RunningIndex ri(make_named_graph(NamedGraph::complete, 5));
    ri.delete_edge(0, 1);
    CHECK(ri.current() == expected);
  }
  SUBCASE("precondition") {
    RunningIndex ri(make_named_graph(NamedGraph::path, 3));
    CHECK_THROWS_AS(ri.delete_edge(0, 2), PreconditionError);
    CHECK_THROWS_AS(ri.insert_edge(0, 1), PreconditionError);
    CHECK(ri.current() == 6);
  }
}

TEST_CASE("insert/delete round trips restore the value") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 30)(rng);
    RunningIndex ri(random_gnp(n, 0.3, rng));
    const Index start = ri.current();
    Edge uv;
    if (random_non_edge(ri.graph(), rng, uv)) {
      ri.insert_edge(uv.first, uv.second);
      ri.delete_edge(uv.first, uv.second);
      CHECK(ri.current() == start);
    }
    if (ri.graph().size() > 0) {
      const auto edges = ri.graph().edges();
      const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      ri.delete_edge(e.first, e.second);
      ri.insert_edge(e.first, e.second);
      CHECK(ri.current() == start);
    }
  }
}

TEST_CASE("random update streams stay exact within the work bound") {
  Rng rng(77);
  RunningIndex ri(random_gnp(60, 0.1, rng));
  for (int step = 0; step < 1000; ++step) {
    const Graph& g = ri.graph();
    const bool insert = std::uniform_int_distribution<int>(0, 1)(rng) == 0 || g.size() == 0;
    Edge uv;
    if (insert) {
      if (!random_non_edge(g, rng, uv)) continue;
    } else {
      const auto edges = g.edges();
      uv = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    }
    const std::size_t budget = g.degree(uv.first) + g.degree(uv.second) + 4;
    const std::size_t before = ri.work_counter();
    if (insert) {
      ri.insert_edge(uv.first, uv.second);
    } else {
      ri.delete_edge(uv.first, uv.second);
    }
    CHECK(ri.work_counter() - before <= budget);
    CHECK(ri.current() % 2 == 0);
  }
  CHECK(ri.current() == oracle::index_of(ri.graph()));
}

TEST_CASE("added vertices start isolated") {
  RunningIndex ri(make_named_graph(NamedGraph::star, 4));
  const Vertex w = ri.add_vertex();
  ri.insert_edge(0, w);
  CHECK(ri.current() == 60);
  CHECK(ri.consistent());
}
