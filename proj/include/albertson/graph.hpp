#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace albertson {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Malformed caller input: vertex id out of range, self-loop, bad parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a graph that does not satisfy its
/// structural precondition (edge missing, wrong endpoint degrees, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text that does not decode as graph6 or as an edge list.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Simple undirected graph on dense vertex ids 0..n-1.
 *
 * Each vertex keeps a sorted neighbor list; membership tests are binary
 * searches. No self-loops, no parallel edges.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Builds from an edge list; duplicates are silently merged.
  /// Throws InputError on out-of-range ids or self-loops.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::size_t degree(Vertex u) const { return adjacency_.at(u).size(); }
  std::span<const Vertex> neighbors(Vertex u) const { return adjacency_.at(u); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, ordered lexicographically.
  std::vector<Edge> edges() const;

  /// Appends a new isolated vertex and returns its id.
  Vertex add_vertex();
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);

  /// Relabels vertex u as perm[u].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct BuildResult {
  Graph graph;
  std::size_t duplicates_dropped = 0;

  bool has_warning() const noexcept { return duplicates_dropped > 0; }
};

/// Builds a graph from an edge list, reporting dropped duplicate pairs.
BuildResult build_graph(std::size_t order, std::span<const Edge> edges);

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
};

/// Degrees of every vertex; Δ and δ are 0 for the empty graph.
DegreeProfile degree_profile(const Graph& g);

enum class NamedGraph { path, star, cycle, complete, prism };

NamedGraph parse_named_graph(const std::string& name);
const char* to_string(NamedGraph kind);

/**
 * Standard families. `path`/`star` take the vertex count (>= 1), `cycle` and
 * `complete` the vertex count (>= 3), and `prism` the cycle length s (>= 3),
 * giving the circular ladder on 2s vertices: outer cycle 0..s-1, inner cycle
 * s..2s-1, rungs i -- s+i.
 */
Graph make_named_graph(NamedGraph kind, std::size_t size);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Number of connected components; 0 for the empty graph.
std::size_t component_count(const Graph& g);

}  // namespace albertson
