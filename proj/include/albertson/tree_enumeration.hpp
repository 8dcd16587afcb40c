#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "albertson/graph.hpp"
#include "albertson/invariants.hpp"

namespace albertson {

inline constexpr std::size_t kMaxTreeOrder = 18;

/// Rooted tree from a preorder level sequence (depth of each vertex, root
/// first at depth 0). Vertex i of the result is position i of the sequence.
Graph tree_from_level_sequence(std::span<const int> levels);

/**
 * Yields one representative of every isomorphism class of free trees on
 * n vertices, each exactly once.
 *
 * Trees are walked as canonical level sequences rooted at a center, using
 * the successor rule for rooted trees and skipping sequences whose first
 * root subtree is not the tallest (or, on ties, not the smallest). The
 * first tree is the path, the last the star.
 */
class FreeTreeGenerator {
 public:
  /// InputError unless 1 <= n <= kMaxTreeOrder.
  explicit FreeTreeGenerator(std::size_t n);

  std::optional<std::vector<int>> next_level_sequence();
  std::optional<Graph> next();

 private:
  bool advance_to_valid();

  std::size_t n_;
  std::vector<int> levels_;
  bool exhausted_ = false;
};

std::vector<Graph> enumerate_free_trees(std::size_t n);
void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

struct TreeReport {
  std::size_t n = 0;
  std::size_t tree_count = 0;
  Index min_value = 0;
  Index max_value = 0;
  std::size_t min_witnesses = 0;
  std::size_t max_witnesses = 0;
  /// The unique minimiser is the path / the unique maximiser is the star.
  bool min_is_path = false;
  bool max_is_star = false;
  /// graph6 of trees with index below Δ(Δ² - 1).
  std::vector<std::string> bound_violations;
  /// graph6 of trees where (index == bound) disagrees with
  /// classify_tree_equality.
  std::vector<std::string> equality_mismatches;
};

/// Bound and extremal statistics over every free tree of order n >= 1.
TreeReport scan_trees(std::size_t n);

/// scan_trees restricted to n >= 5 (InputError otherwise), where the path
/// and the star are the unique strict extremes.
TreeReport verify_trees(std::size_t n);

/// Whether a report meets every extremal and bound expectation for order n.
bool tree_report_clean(const TreeReport& report);

}  // namespace albertson
