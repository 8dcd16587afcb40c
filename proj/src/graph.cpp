#include "albertson/graph.hpp"

#include <algorithm>
#include <numeric>

namespace albertson {

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  return build_graph(order, edges).graph;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw InputError("vertex id out of range: (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") with n = " + std::to_string(order()));
  }
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nu = adjacency_[u];
  const auto& nv = adjacency_[v];
  // search the shorter list
  return nu.size() <= nv.size() ? std::binary_search(nu.begin(), nu.end(), v)
                                : std::binary_search(nv.begin(), nv.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return false;
  nu.erase(it);
  auto& nv = adjacency_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
  return true;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != order()) {
    throw InputError("permutation length does not match graph order");
  }
  Graph out(order());
  for (Vertex u = 0; u < order(); ++u) {
    auto& row = out.adjacency_[perm[u]];
    row.reserve(adjacency_[u].size());
    for (Vertex v : adjacency_[u]) row.push_back(perm[v]);
    std::sort(row.begin(), row.end());
  }
  out.edge_count_ = edge_count_;
  return out;
}

BuildResult build_graph(std::size_t order, std::span<const Edge> edges) {
  BuildResult result{Graph(order), 0};
  for (auto [u, v] : edges) {
    if (!result.graph.add_edge(u, v)) ++result.duplicates_dropped;
  }
  return result;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (Vertex u = 0; u < g.order(); ++u) p.degrees[u] = g.degree(u);
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

NamedGraph parse_named_graph(const std::string& name) {
  if (name == "path") return NamedGraph::path;
  if (name == "star") return NamedGraph::star;
  if (name == "cycle") return NamedGraph::cycle;
  if (name == "complete") return NamedGraph::complete;
  if (name == "prism") return NamedGraph::prism;
  throw InputError("unknown graph kind '" + name + "'");
}

const char* to_string(NamedGraph kind) {
  switch (kind) {
    case NamedGraph::path: return "path";
    case NamedGraph::star: return "star";
    case NamedGraph::cycle: return "cycle";
    case NamedGraph::complete: return "complete";
    case NamedGraph::prism: return "prism";
  }
  return "?";
}

Graph make_named_graph(NamedGraph kind, std::size_t size) {
  const std::size_t minimum =
      (kind == NamedGraph::path || kind == NamedGraph::star) ? 1 : 3;
  if (size < minimum) {
    throw InputError(std::string(to_string(kind)) + " requires size >= " +
                     std::to_string(minimum));
  }
  const auto s = static_cast<Vertex>(size);
  switch (kind) {
    case NamedGraph::path: {
      Graph g(size);
      for (Vertex i = 0; i + 1 < s; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case NamedGraph::star: {
      Graph g(size);
      for (Vertex i = 1; i < s; ++i) g.add_edge(0, i);
      return g;
    }
    case NamedGraph::cycle: {
      Graph g(size);
      for (Vertex i = 0; i < s; ++i) g.add_edge(i, (i + 1) % s);
      return g;
    }
    case NamedGraph::complete: {
      Graph g(size);
      for (Vertex i = 0; i < s; ++i)
        for (Vertex j = i + 1; j < s; ++j) g.add_edge(i, j);
      return g;
    }
    case NamedGraph::prism: {
      Graph g(2 * size);
      for (Vertex i = 0; i < s; ++i) {
        g.add_edge(i, (i + 1) % s);
        g.add_edge(s + i, s + (i + 1) % s);
        g.add_edge(i, s + i);
      }
      return g;
    }
  }
  throw InputError("unknown graph kind");
}

namespace {

// Marks every vertex reachable from `root`; returns how many were reached.
std::size_t flood(const Graph& g, Vertex root, std::vector<char>& seen) {
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  return flood(g, 0, seen) == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t components = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!seen[u]) {
      flood(g, u, seen);
      ++components;
    }
  }
  return components;
}

}  // namespace albertson
