#include "albertson/tree_enumeration.hpp"

#include <algorithm>

#include "albertson/graph6.hpp"

namespace albertson {

namespace {

// Next rooted level sequence in reverse lexicographic order, changing
// positions >= p. Returns false when p reaches the root.
bool next_rooted(std::vector<int>& levels, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  for (std::size_t i = p; i < levels.size(); ++i) levels[i] = levels[i - p + q];
  return true;
}

bool next_rooted(std::vector<int>& levels) {
  std::size_t p = levels.size() - 1;
  while (p > 0 && levels[p] == 1) --p;
  return next_rooted(levels, p);
}

// The first root subtree (positions 1..m-1, depths shifted down by one) and
// the remainder re-rooted at position 0.
struct Split {
  std::vector<int> left;
  std::vector<int> rest;
};

Split split_first_subtree(const std::vector<int>& levels) {
  std::size_t m = levels.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] != 1) continue;
    if (seen_one) {
      m = i;
      break;
    }
    seen_one = true;
  }
  Split s;
  for (std::size_t i = 1; i < m; ++i) s.left.push_back(levels[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < levels.size(); ++i) s.rest.push_back(levels[i]);
  return s;
}

int height(const std::vector<int>& seq) { return *std::max_element(seq.begin(), seq.end()); }

}  // namespace

Graph tree_from_level_sequence(std::span<const int> levels) {
  Graph g(levels.size());
  std::vector<Vertex> path;  // ancestors of the current position
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (!path.empty() && levels[path.back()] >= levels[i]) path.pop_back();
    if (!path.empty()) g.add_edge(path.back(), static_cast<Vertex>(i));
    path.push_back(static_cast<Vertex>(i));
  }
  return g;
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw InputError("free tree order must be in 1.." + std::to_string(kMaxTreeOrder) +
                     ", got " + std::to_string(n));
  }
  // The path rooted at its center.
  for (std::size_t i = 0; i <= n / 2; ++i) levels_.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) levels_.push_back(static_cast<int>(i));
}

bool FreeTreeGenerator::advance_to_valid() {
  const Split s = split_first_subtree(levels_);
  const int left_height = height(s.left);
  const int rest_height = height(s.rest);
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (s.left.size() > s.rest.size()) {
      valid = false;
    } else if (s.left.size() == s.rest.size() && s.left > s.rest) {
      valid = false;
    }
  }
  if (valid) return true;

  // Skip every sequence sharing this invalid first subtree.
  const std::size_t p = s.left.size();
  const int pivot = levels_[p];
  next_rooted(levels_, p);
  if (pivot > 2) {
    const int new_left_height = height(split_first_subtree(levels_).left);
    const std::size_t tail = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t k = 0; k < tail; ++k) {
      levels_[levels_.size() - tail + k] = static_cast<int>(k) + 1;
    }
  }
  return true;
}

std::optional<std::vector<int>> FreeTreeGenerator::next_level_sequence() {
  if (exhausted_) return std::nullopt;
  if (n_ == 1) {
    exhausted_ = true;
    return std::vector<int>{0};
  }
  advance_to_valid();
  std::vector<int> out = levels_;
  if (!next_rooted(levels_)) exhausted_ = true;
  return out;
}

std::optional<Graph> FreeTreeGenerator::next() {
  auto levels = next_level_sequence();
  if (!levels) return std::nullopt;
  return tree_from_level_sequence(*levels);
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  std::vector<Graph> trees;
  for_each_free_tree(n, [&](const Graph& t) { trees.push_back(t); });
  return trees;
}

void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) visit(*t);
}

TreeReport scan_trees(std::size_t n) {
  TreeReport r;
  r.n = n;
  bool min_path = false;
  bool max_star = false;
  for_each_free_tree(n, [&](const Graph& t) {
    const Index value = modified_albertson(t);
    const std::size_t delta = degree_profile(t).max_degree;
    const Index bound = tree_lower_bound(delta);
    const bool is_path = delta <= 2;
    const bool is_star = n <= 2 || delta + 1 == n;

    if (r.tree_count == 0 || value < r.min_value) {
      r.min_value = value;
      r.min_witnesses = 0;
      min_path = true;
    }
    if (value == r.min_value) {
      ++r.min_witnesses;
      min_path = min_path && is_path;
    }
    if (r.tree_count == 0 || value > r.max_value) {
      r.max_value = value;
      r.max_witnesses = 0;
      max_star = true;
    }
    if (value == r.max_value) {
      ++r.max_witnesses;
      max_star = max_star && is_star;
    }
    ++r.tree_count;

    if (value < bound) r.bound_violations.push_back(emit_graph6(t));
    if ((value == bound) != classify_tree_equality(t)) {
      r.equality_mismatches.push_back(emit_graph6(t));
    }
  });
  r.min_is_path = r.min_witnesses == 1 && min_path;
  r.max_is_star = r.max_witnesses == 1 && max_star;
  return r;
}

TreeReport verify_trees(std::size_t n) {
  if (n < 5) {
    throw InputError("tree extremal check needs n >= 5 (path and star coincide "
                     "with other trees below that), got " + std::to_string(n));
  }
  return scan_trees(n);
}

bool tree_report_clean(const TreeReport& r) {
  return r.bound_violations.empty() && r.equality_mismatches.empty() &&
         r.min_is_path && r.max_is_star && r.min_value == 6 &&
         r.max_value == star_value(r.n);
}

}  // namespace albertson
