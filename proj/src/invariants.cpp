#include "albertson/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace albertson {

Index edge_imbalance(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") is not in the graph");
  }
  const auto du = static_cast<Index>(g.degree(u));
  const auto dv = static_cast<Index>(g.degree(v));
  return du > dv ? du - dv : dv - du;
}

Index albertson(const Graph& g) {
  Index total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto du = static_cast<Index>(g.degree(u));
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      const auto dv = static_cast<Index>(g.degree(v));
      total += du > dv ? du - dv : dv - du;
    }
  }
  return total;
}

Index modified_albertson(const Graph& g) {
  Index total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto du = static_cast<Index>(g.degree(u));
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      total += squared_degree_gap(du, static_cast<Index>(g.degree(v)));
    }
  }
  if (total % 2 != 0) {
    throw std::logic_error("modified Albertson index came out odd (" +
                           std::to_string(total) + "); graph state is corrupt");
  }
  return total;
}

InvariantReport compute_invariants(const Graph& g, bool with_terms) {
  InvariantReport report;
  report.albertson = albertson(g);
  report.modified = modified_albertson(g);
  report.max_degree = degree_profile(g).max_degree;
  if (with_terms) {
    std::vector<EdgeTerm> terms;
    terms.reserve(g.size());
    for (auto [u, v] : g.edges()) {
      terms.push_back({u, v,
                       squared_degree_gap(static_cast<Index>(g.degree(u)),
                                          static_cast<Index>(g.degree(v)))});
    }
    report.per_edge_terms = std::move(terms);
  }
  return report;
}

NeighborPartition neighbor_partition(const Graph& g, Vertex u) {
  if (u >= g.order()) {
    throw InputError("vertex " + std::to_string(u) + " out of range");
  }
  NeighborPartition p;
  const std::size_t du = g.degree(u);
  for (Vertex v : g.neighbors(u)) {
    const std::size_t dv = g.degree(v);
    if (dv < du) {
      ++p.lower;
    } else if (dv == du) {
      ++p.equal;
    } else {
      ++p.greater;
    }
  }
  assert(p.total() == du);
  return p;
}

bool classify_tree_equality(const Graph& t) {
  if (!is_tree(t)) throw InputError("classify_tree_equality: input is not a tree");
  std::size_t branching = 0;
  for (Vertex u = 0; u < t.order(); ++u) {
    if (t.degree(u) >= 3) ++branching;
  }
  return branching <= 1;
}

bool components_regular(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (g.degree(u) != g.degree(v)) return false;
    }
  }
  return true;
}

}  // namespace albertson
