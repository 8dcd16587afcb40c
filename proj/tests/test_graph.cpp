#include <doctest.h>

#include <numeric>
#include <sstream>

#include "albertson/edge_list.hpp"
#include "albertson/graph.hpp"
#include "albertson/random_graphs.hpp"

using namespace albertson;

namespace {

std::vector<std::size_t> degrees(const Graph& g) { return degree_profile(g).degrees; }

}  // namespace

TEST_CASE("build_graph") {
  SUBCASE("path on three vertices") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    auto r = build_graph(3, edges);
    CHECK(degrees(r.graph) == std::vector<std::size_t>{1, 2, 1});
    CHECK_FALSE(r.has_warning());
  }
  SUBCASE("single vertex") {
    auto r = build_graph(1, {});
    CHECK(r.graph.order() == 1);
    CHECK(r.graph.size() == 0);
  }
  SUBCASE("duplicates are merged with a warning") {
    const std::vector<Edge> edges{{0, 1}, {0, 1}, {2, 3}};
    auto r = build_graph(4, edges);
    CHECK(r.graph.size() == 2);
    CHECK(r.has_warning());
    CHECK(r.duplicates_dropped == 1);
  }
  SUBCASE("reversed duplicate also counts") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}};
    CHECK(build_graph(2, edges).duplicates_dropped == 1);
  }
  SUBCASE("errors") {
    const std::vector<Edge> out_of_range{{0, 3}};
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(build_graph(3, out_of_range), InputError);
    CHECK_THROWS_AS(build_graph(3, loop), InputError);
  }
}

TEST_CASE("named graphs") {
  CHECK(degrees(make_named_graph(NamedGraph::star, 5)) == std::vector<std::size_t>{4, 1, 1, 1, 1});
  const Graph k5 = make_named_graph(NamedGraph::complete, 5);
  CHECK(k5.size() == 10);

  const Graph prism3 = make_named_graph(NamedGraph::prism, 3);
  CHECK(prism3.order() == 6);
  CHECK(prism3.size() == 9);
  for (Vertex u = 0; u < 6; ++u) CHECK(prism3.degree(u) == 3);

  CHECK(make_named_graph(NamedGraph::path, 1).size() == 0);
  CHECK(make_named_graph(NamedGraph::cycle, 3).size() == 3);
  CHECK(parse_named_graph("prism") == NamedGraph::prism);

  CHECK_THROWS_AS(make_named_graph(NamedGraph::path, 0), InputError);
  CHECK_THROWS_AS(make_named_graph(NamedGraph::cycle, 2), InputError);
  CHECK_THROWS_AS(make_named_graph(NamedGraph::prism, 2), InputError);
  CHECK_THROWS_AS(parse_named_graph("wheel"), InputError);
}

TEST_CASE("prisms are cubic with 3s edges") {
  for (std::size_t s = 3; s <= 40; ++s) {
    const Graph g = make_named_graph(NamedGraph::prism, s);
    CHECK(g.size() == 3 * s);
    const auto p = degree_profile(g);
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    CHECK(is_connected(g));
  }
}

TEST_CASE("connectivity and trees") {
  CHECK(is_connected(make_named_graph(NamedGraph::path, 4)));
  CHECK_FALSE(is_connected(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));

  CHECK(is_tree(make_named_graph(NamedGraph::star, 6)));
  CHECK_FALSE(is_tree(make_named_graph(NamedGraph::cycle, 4)));
  CHECK(is_tree(Graph(1)));
  CHECK_FALSE(is_tree(Graph(0)));
  CHECK_FALSE(is_tree(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}})));

  CHECK(component_count(Graph(3)) == 3);
  CHECK(component_count(Graph::from_edges(5, std::vector<Edge>{{0, 1}, {2, 3}})) == 3);
}

TEST_CASE("mutation keeps adjacency sorted and symmetric") {
  Graph g(3);
  CHECK(g.add_edge(2, 0));
  CHECK(g.add_edge(1, 0));
  CHECK_FALSE(g.add_edge(0, 2));
  CHECK(g.neighbors(0).size() == 2);
  CHECK(g.neighbors(0)[0] == 1);
  CHECK(g.neighbors(0)[1] == 2);
  const Vertex x = g.add_vertex();
  CHECK(x == 3);
  CHECK(g.remove_edge(0, 2));
  CHECK_FALSE(g.remove_edge(0, 2));
  CHECK(g.size() == 1);
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 99));
  CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
}

TEST_CASE("handshake and symmetry on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    const auto p = degree_profile(g);
    CHECK(std::accumulate(p.degrees.begin(), p.degrees.end(), std::size_t{0}) == 2 * g.size());
    for (Vertex u = 0; u < n; ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      for (Vertex v : g.neighbors(u)) CHECK(g.has_edge(v, u));
    }
  }
}

TEST_CASE("edge list format") {
  SUBCASE("comments and blank lines") {
    auto r = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2\n# closing edge\n2 0\n");
    CHECK(r.graph.order() == 3);
    CHECK(r.graph.size() == 3);
  }
  SUBCASE("duplicate edge tolerated") {
    auto r = parse_edge_list("3 3\n0 1\n1 0\n1 2\n");
    CHECK(r.graph.size() == 2);
    CHECK(r.has_warning());
  }
  SUBCASE("write then read") {
    const Graph g = make_named_graph(NamedGraph::prism, 5);
    std::ostringstream os;
    write_edge_list(os, g);
    CHECK(parse_edge_list(os.str()).graph == g);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_edge_list(""), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n-1 2\n"), FormatError);
  }
}
