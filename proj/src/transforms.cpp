#include "albertson/transforms.hpp"

#include <stdexcept>

#include "albertson/invariants.hpp"

namespace albertson {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void require_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw PreconditionError("subdivision needs an existing edge; " + edge_text(u, v) +
                            " is not in the graph");
  }
}

}  // namespace

Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
  require_edge(g, u, v);
  Graph out = g;
  const Vertex x = out.add_vertex();
  out.remove_edge(u, v);
  out.add_edge(u, x);
  out.add_edge(x, v);
  return out;
}

bool transformation1_applies(const Graph& g, Vertex u, Vertex v) {
  return g.has_edge(u, v) && g.degree(u) == 3 && g.degree(v) == 3;
}

bool neutral_subdivision_applies(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) return false;
  const std::size_t du = g.degree(u);
  const std::size_t dv = g.degree(v);
  return du == 2 || dv == 2 || (du == 1 && dv >= 2) || (dv == 1 && du >= 2);
}

Graph apply_transformation1(const Graph& g, Vertex u, Vertex v) {
  require_edge(g, u, v);
  if (!transformation1_applies(g, u, v)) {
    throw PreconditionError("degree-3 subdivision requires d_u = d_v = 3; edge " +
                            edge_text(u, v) + " has degrees (" +
                            std::to_string(g.degree(u)) + ", " +
                            std::to_string(g.degree(v)) + ")");
  }
  Graph out = subdivide_edge(g, u, v);
  if (modified_albertson(out) != modified_albertson(g) + 10) {
    throw std::logic_error("degree-3 subdivision did not add exactly 10");
  }
  return out;
}

Graph neutral_subdivide(const Graph& g, Vertex u, Vertex v) {
  require_edge(g, u, v);
  if (!neutral_subdivision_applies(g, u, v)) {
    throw PreconditionError(
        "neutral subdivision requires an endpoint of degree 2, or a pendant "
        "endpoint whose neighbor has degree >= 2; edge " +
        edge_text(u, v) + " has degrees (" + std::to_string(g.degree(u)) + ", " +
        std::to_string(g.degree(v)) + ")");
  }
  Graph out = subdivide_edge(g, u, v);
  if (modified_albertson(out) != modified_albertson(g)) {
    throw std::logic_error("neutral subdivision changed the index");
  }
  return out;
}

}  // namespace albertson
