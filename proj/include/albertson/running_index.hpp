#pragma once

#include "albertson/graph.hpp"
#include "albertson/invariants.hpp"

namespace albertson {

/**
 * Change in the modified index when the missing edge uv is added, given the
 * endpoint degrees and how many neighbors of each endpoint have strictly
 * larger degree. Requires d_high >= d_low with the counts matched to the
 * same endpoints:
 *
 *   3 d_h (d_h + 1) + d_l (d_l - 1) - 2 [ (2 d_h + 1) g_h + (2 d_l + 1) g_l ]
 */
constexpr Index addition_delta_formula(Index d_high, Index d_low, Index greater_high,
                                       Index greater_low) noexcept {
  return 3 * d_high * (d_high + 1) + d_low * (d_low - 1) -
         2 * ((2 * d_high + 1) * greater_high + (2 * d_low + 1) * greater_low);
}

/**
 * A*(g + uv) - A*(g) for non-adjacent distinct u, v, touching only N(u) and
 * N(v). Endpoint order does not matter. If `work` is non-null it is
 * incremented once per neighbor degree inspected.
 *
 * Throws PreconditionError if u == v or uv is already an edge, InputError
 * on out-of-range ids.
 */
Index edge_addition_delta(const Graph& g, Vertex u, Vertex v,
                          std::size_t* work = nullptr);

/// A graph together with its modified Albertson index, kept current under
/// edge insertions and deletions in O(d_u + d_v) per update.
class RunningIndex {
 public:
  RunningIndex() = default;
  explicit RunningIndex(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  Index current() const noexcept { return current_; }

  /// Cumulative neighbor-degree inspections across all updates.
  std::size_t work_counter() const noexcept { return work_; }
  std::size_t last_update_work() const noexcept { return last_work_; }

  /// Adds uv and returns the applied delta. PreconditionError if uv exists.
  Index insert_edge(Vertex u, Vertex v);
  /// Removes uv and returns the applied delta (negated re-insertion delta).
  /// PreconditionError if uv is absent.
  Index delete_edge(Vertex u, Vertex v);

  Vertex add_vertex() { return graph_.add_vertex(); }

  /// Full recomputation agrees with the cached value.
  bool consistent() const { return current_ == modified_albertson(graph_); }

 private:
  void debug_check() const;

  Graph graph_;
  Index current_ = 0;
  std::size_t work_ = 0;
  std::size_t last_work_ = 0;
};

RunningIndex insert_edge_tracked(RunningIndex ri, Vertex u, Vertex v);
RunningIndex delete_edge_tracked(RunningIndex ri, Vertex u, Vertex v);

}  // namespace albertson
