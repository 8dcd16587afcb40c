#include <doctest.h>

#include "albertson/graph6.hpp"
#include "albertson/random_graphs.hpp"

using namespace albertson;

TEST_CASE("hand-encoded graph6 strings") {
  // K3: cells (0,1),(0,2),(1,2) = 111, padded 111000 = 56, +63 = 'w'.
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3 == make_named_graph(NamedGraph::complete, 3));
  // P3 centred at 1: cells 1,0,1 -> 101000 = 40, +63 = 'g'.
  const Graph p3 = parse_graph6("Bg");
  CHECK(p3 == make_named_graph(NamedGraph::path, 3));
  CHECK(p3.degree(1) == 2);
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK(emit_graph6(k3) == "Bw");
  CHECK(emit_graph6(p3) == "Bg");
}

TEST_CASE("graph6 headers and newlines") {
  CHECK(parse_graph6(">>graph6<<Bw\n") == make_named_graph(NamedGraph::complete, 3));
  CHECK(parse_graph6("Bg\r\n").size() == 2);
}

TEST_CASE("graph6 long order form") {
  const Graph g = make_named_graph(NamedGraph::path, 70);
  const std::string s = emit_graph6(g);
  CHECK(s[0] == '~');
  // 70 = 0b000000 000001 000110
  CHECK(s[1] == static_cast<char>(63));
  CHECK(s[2] == static_cast<char>(63 + 1));
  CHECK(s[3] == static_cast<char>(63 + 6));
  CHECK(s.size() == 4 + (70 * 69 / 2 + 5) / 6);
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 format errors") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("B"), FormatError);         // truncated body
  CHECK_THROWS_AS(parse_graph6("Bww"), FormatError);       // trailing byte
  CHECK_THROWS_AS(parse_graph6("Bx"), FormatError);        // padding bit set (111001)
  CHECK_THROWS_AS(parse_graph6("B "), FormatError);        // byte below 63
  CHECK_THROWS_AS(parse_graph6("B\x7f"), FormatError);     // byte above 126
  CHECK_THROWS_AS(parse_graph6("~?"), FormatError);        // truncated long header
  CHECK_THROWS_AS(parse_graph6("~~??????"), FormatError);  // 8-byte orders unsupported
}

TEST_CASE("graph6 round trip on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 80)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("graph6 round trip on every labeled graph with n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Edge> cells;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) cells.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
      Graph g(n);
      for (std::size_t k = 0; k < cells.size(); ++k)
        if ((mask >> k) & 1) g.add_edge(cells[k].first, cells[k].second);
      REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
  }
}
