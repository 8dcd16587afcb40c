#pragma once

#include "albertson/graph.hpp"

namespace albertson {

/// Replaces edge uv by the path u - x - v, where x = g.order() is a new
/// vertex. PreconditionError if uv is not an edge.
Graph subdivide_edge(const Graph& g, Vertex u, Vertex v);

/// Subdivides an edge joining two degree-3 vertices; the modified index
/// grows by exactly 10.
Graph apply_transformation1(const Graph& g, Vertex u, Vertex v);

/// Subdivides an edge that has a degree-2 endpoint, or a pendant endpoint
/// whose neighbor has degree >= 2; the modified index is unchanged.
Graph neutral_subdivide(const Graph& g, Vertex u, Vertex v);

/// Whether apply_transformation1 / neutral_subdivide accept the edge uv.
bool transformation1_applies(const Graph& g, Vertex u, Vertex v);
bool neutral_subdivision_applies(const Graph& g, Vertex u, Vertex v);

}  // namespace albertson
