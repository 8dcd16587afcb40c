#include "albertson/edge_list.hpp"

#include <sstream>
#include <string>

namespace albertson {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Parses exactly two non-negative integers from a line.
std::pair<std::size_t, std::size_t> two_numbers(const std::string& line,
                                                std::size_t line_no) {
  std::istringstream fields(line);
  long long a = -1;
  long long b = -1;
  std::string extra;
  if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
    throw FormatError("edge list line " + std::to_string(line_no) +
                      ": expected two non-negative integers, got '" + line + "'");
  }
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

}  // namespace

BuildResult read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto [a, b] = two_numbers(line, line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (a >= n || b >= n) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": vertex id out of range for n = " + std::to_string(n));
    }
    if (a == b) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": self-loop at vertex " + std::to_string(a));
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw FormatError("edge list: missing 'n m' header");
  if (edges.size() != m) {
    throw FormatError("edge list: header declares " + std::to_string(m) +
                      " edges, found " + std::to_string(edges.size()));
  }
  return build_graph(n, edges);
}

BuildResult parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace albertson
