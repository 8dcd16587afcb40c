#pragma once

#include <random>
#include <vector>

#include "albertson/graph.hpp"

namespace albertson {

using Rng = std::mt19937_64;

/// G(n, p): each of the C(n, 2) pairs present independently with prob. p.
Graph random_gnp(std::size_t n, double p, Rng& rng);

/// Random recursive tree: vertex k attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, Rng& rng);

/// Random graph of maximum degree 3 with most vertices at degree 3.
Graph random_subcubic(std::size_t n, Rng& rng);

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

/// A uniformly chosen non-adjacent distinct pair; false if g is complete.
bool random_non_edge(const Graph& g, Rng& rng, Edge& out);

}  // namespace albertson
