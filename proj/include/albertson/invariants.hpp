#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "albertson/graph.hpp"

namespace albertson {

using Index = std::int64_t;

/// Neighbors of u split by whether their degree is lower, equal or greater.
struct NeighborPartition {
  std::size_t lower = 0;
  std::size_t equal = 0;
  std::size_t greater = 0;

  std::size_t total() const noexcept { return lower + equal + greater; }
  friend bool operator==(const NeighborPartition&, const NeighborPartition&) = default;
};

struct EdgeTerm {
  Vertex u;
  Vertex v;
  Index value;  // |d_u^2 - d_v^2|
};

struct InvariantReport {
  Index albertson = 0;
  Index modified = 0;
  std::size_t max_degree = 0;
  std::optional<std::vector<EdgeTerm>> per_edge_terms;
};

/// |d_u - d_v| for an existing edge; InputError if uv is not an edge.
Index edge_imbalance(const Graph& g, Vertex u, Vertex v);

/// |d_u^2 - d_v^2| for two degrees.
constexpr Index squared_degree_gap(Index du, Index dv) noexcept {
  const Index diff = du * du - dv * dv;
  return diff < 0 ? -diff : diff;
}

/// Sum of edge imbalances.
Index albertson(const Graph& g);

/**
 * Sum over edges of |d_u^2 - d_v^2|.
 *
 * The result is always even; an odd value means a broken graph invariant
 * and raises std::logic_error.
 */
Index modified_albertson(const Graph& g);

InvariantReport compute_invariants(const Graph& g, bool with_terms = false);

NeighborPartition neighbor_partition(const Graph& g, Vertex u);

/// Δ(Δ² - 1): the smallest value the modified index takes on a tree with
/// maximum degree Δ.
constexpr Index tree_lower_bound(std::size_t max_degree) noexcept {
  const auto d = static_cast<Index>(max_degree);
  return d == 0 ? 0 : d * (d * d - 1);
}

/// (n-1)((n-1)^2 - 1): the value on the star S_n, the n-vertex tree maximum.
constexpr Index star_value(std::size_t n) noexcept {
  return n == 0 ? 0 : tree_lower_bound(n - 1);
}

/**
 * True iff the tree meets tree_lower_bound with equality, i.e. it is a path
 * or has exactly one vertex of degree >= 3 (a spider).
 * Throws InputError if `t` is not a tree.
 */
bool classify_tree_equality(const Graph& t);

/// True iff every connected component is a regular graph.
bool components_regular(const Graph& g);

}  // namespace albertson
