#include "albertson/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace albertson {

namespace {

using Coloring = std::vector<int>;

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = degree_profile(g).degrees;
  std::sort(d.begin(), d.end());
  return d;
}

// Refines the colorings of both graphs with a shared signature table, so
// equal colors mean the same thing on either side. Returns false as soon as
// the color histograms diverge.
bool refine_jointly(const Graph& a, const Graph& b, Coloring& ca, Coloring& cb) {
  const std::size_t n = a.order();
  ca.assign(n, 0);
  cb.assign(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    ca[u] = static_cast<int>(a.degree(u));
    cb[u] = static_cast<int>(b.degree(u));
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> table;
    auto signature = [](const Graph& g, const Coloring& c, Vertex u) {
      std::vector<int> sig;
      sig.reserve(g.degree(u) + 1);
      for (Vertex w : g.neighbors(u)) sig.push_back(c[w]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), c[u]);
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (Vertex u = 0; u < n; ++u) {
      sa[u] = signature(a, ca, u);
      sb[u] = signature(b, cb, u);
      table.emplace(sa[u], 0);
      table.emplace(sb[u], 0);
    }
    int next = 0;
    for (auto& entry : table) entry.second = next++;

    std::vector<int> hist(table.size(), 0);
    for (Vertex u = 0; u < n; ++u) {
      ca[u] = table[sa[u]];
      cb[u] = table[sb[u]];
      ++hist[ca[u]];
      --hist[cb[u]];
    }
    if (std::any_of(hist.begin(), hist.end(), [](int h) { return h != 0; })) {
      return false;
    }
    if (table.size() == classes) return true;
    classes = table.size();
  }
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, Coloring ca, Coloring cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.order(), kUnset), used_(a.order(), 0) {
    plan_order();
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnset = static_cast<Vertex>(-1);

  // Static search order: start in the rarest color class, then repeatedly
  // take the vertex with the most already-ordered neighbors.
  void plan_order() {
    const std::size_t n = a_.order();
    std::map<int, int> sizes;
    for (int c : ca_) ++sizes[c];
    std::vector<char> placed(n, 0);
    std::vector<int> links(n, 0);
    order_.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = kUnset;
      for (Vertex u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (best == kUnset || links[u] > links[best] ||
            (links[u] == links[best] && sizes[ca_[u]] < sizes[ca_[best]])) {
          best = u;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex w : a_.neighbors(best)) ++links[w];
    }
  }

  bool consistent(Vertex u, Vertex image) const {
    std::size_t mapped_neighbors = 0;
    for (Vertex w : a_.neighbors(u)) {
      if (map_[w] == kUnset) continue;
      if (!b_.has_edge(image, map_[w])) return false;
      ++mapped_neighbors;
    }
    std::size_t image_neighbors = 0;
    for (Vertex x : b_.neighbors(image)) image_neighbors += used_[x];
    return mapped_neighbors == image_neighbors;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex candidate = 0; candidate < b_.order(); ++candidate) {
      if (used_[candidate] || cb_[candidate] != ca_[u]) continue;
      if (!consistent(u, candidate)) continue;
      map_[u] = candidate;
      used_[candidate] = 1;
      if (extend(depth + 1)) return true;
      map_[u] = kUnset;
      used_[candidate] = 0;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  Coloring ca_;
  Coloring cb_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
  Coloring ca, cb;
  if (!refine_jointly(a, b, ca, cb)) return std::nullopt;
  return Matcher(a, b, std::move(ca), std::move(cb)).run();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace albertson
