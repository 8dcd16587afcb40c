#include "albertson/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace albertson {

Graph random_gnp(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_tree(std::size_t n, Rng& rng) {
  Graph g(n);
  for (Vertex k = 1; k < n; ++k) {
    std::uniform_int_distribution<Vertex> pick(0, k - 1);
    g.add_edge(pick(rng), k);
  }
  return g;
}

Graph random_subcubic(std::size_t n, Rng& rng) {
  Graph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t attempt = 0; attempt < 8 * n; ++attempt) {
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    if (u != v && g.degree(u) < 3 && g.degree(v) < 3) g.add_edge(u, v);
  }
  return g;
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

bool random_non_edge(const Graph& g, Rng& rng, Edge& out) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() == n * (n - 1) / 2) return false;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  // Rejection sampling; dense graphs fall back to a scan.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    if (u != v && !g.has_edge(u, v)) {
      out = {u, v};
      return true;
    }
  }
  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    }
  }
  out = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
  return true;
}

}  // namespace albertson
