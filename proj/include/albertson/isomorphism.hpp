#pragma once

#include <optional>
#include <vector>

#include "albertson/graph.hpp"

namespace albertson {

/**
 * Finds a vertex bijection f with uv in E(a) <=> f(u)f(v) in E(b), or
 * nullopt if none exists.
 *
 * Filters on order, size and sorted degree sequence, then refines both
 * vertex sets jointly by iterated neighbor-color multisets until stable,
 * and finally backtracks over candidates within matching color classes.
 * Meant for small graphs (n <= 16); larger inputs work but can be slow
 * on highly symmetric instances.
 */
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace albertson
