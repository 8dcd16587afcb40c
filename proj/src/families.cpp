#include "albertson/families.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "albertson/transforms.hpp"

namespace albertson {

namespace {

Graph prism(std::size_t s) { return make_named_graph(NamedGraph::prism, s); }

Vertex attach_pendant(Graph& g, Vertex to) {
  const Vertex leaf = g.add_vertex();
  g.add_edge(to, leaf);
  return leaf;
}

Graph base_variant(std::size_t j, std::size_t s) {
  const auto outer = static_cast<Vertex>(s);
  switch (j) {
    case 0:
      return prism(s);
    case 1: {
      Graph g = prism(s);
      const Vertex k = outer / 2;
      for (Vertex r : {Vertex{0}, k}) {
        g.remove_edge(r, outer + r);
        attach_pendant(g, r);
        attach_pendant(g, outer + r);
      }
      return g;
    }
    case 2: {
      // Drop vertex 0 by shifting every id down by one.
      const Graph full = prism(s);
      Graph g(full.order() - 1);
      for (auto [u, v] : full.edges()) {
        if (u != 0 && v != 0) g.add_edge(u - 1, v - 1);
      }
      for (Vertex w : full.neighbors(0)) attach_pendant(g, w - 1);
      return g;
    }
    case 3: {
      Graph g = prism(s);
      g.remove_edge(0, outer);
      attach_pendant(g, 0);
      attach_pendant(g, outer);
      return g;
    }
    case 4: {
      Graph g = subdivide_edge(prism(s), 0, outer);
      attach_pendant(g, static_cast<Vertex>(g.order() - 1));
      return g;
    }
    default:
      throw InputError("family variant j must be in 0..4, got " + std::to_string(j));
  }
}

// Smallest edge (in lexicographic order) joining two degree-3 vertices.
std::optional<Edge> first_cubic_edge(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (transformation1_applies(g, u, v)) return Edge{u, v};
  }
  return std::nullopt;
}

// Subdivides the pendant edge at `leaf` `times` times, always on the edge
// that still touches the leaf.
Graph extend_pendant(Graph g, Vertex leaf, std::size_t times) {
  for (std::size_t r = 0; r < times; ++r) {
    const Vertex anchor = g.neighbors(leaf).front();
    g = neutral_subdivide(g, leaf, anchor);
  }
  return g;
}

Vertex first_pendant(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 1) return u;
  }
  throw std::logic_error("expected a pendant vertex");
}

std::string with_subdivisions(std::string recipe, std::size_t times) {
  if (times == 0) return recipe;
  return recipe + " + " + std::to_string(times) + " neutral subdivision" +
         (times == 1 ? "" : "s");
}

std::string family_recipe(const FamilySpec& spec) {
  return "H(i=" + std::to_string(spec.i) + ",j=" + std::to_string(spec.j) +
         ",s=" + std::to_string(spec.effective_base_size()) + ")";
}

}  // namespace

Index family_base_value(std::size_t j) {
  if (j > 4) throw InputError("family variant j must be in 0..4, got " + std::to_string(j));
  return j == 0 ? 0 : 8 * static_cast<Index>(5 - j);
}

Index FamilySpec::predicted() const {
  const auto ii = static_cast<Index>(i);
  const auto jj = static_cast<Index>(j);
  return j == 0 ? 10 * ii : 2 * (5 * ii - 4 * jj + 20);
}

std::size_t FamilySpec::effective_base_size() const {
  // Each degree-3 subdivision consumes exactly one (3,3) edge and creates none.
  auto cubic_edges = [this](std::size_t s) -> std::size_t {
    switch (j) {
      case 0: return 3 * s;
      case 1: return 3 * s - 2;
      case 2: return 3 * s - 3;
      case 3: return 3 * s - 1;
      default: return 3 * s + 1;
    }
  };
  std::size_t s = std::max(base_size, std::size_t{j == 2 ? 4u : 3u});
  while (cubic_edges(s) < i) ++s;
  return s;
}

Graph construct_family(const FamilySpec& spec) {
  Graph g = base_variant(spec.j, spec.effective_base_size());
  if (modified_albertson(g) != family_base_value(spec.j)) {
    throw std::logic_error("family base variant has the wrong index");
  }
  for (std::size_t step = 0; step < spec.i; ++step) {
    auto edge = first_cubic_edge(g);
    if (!edge) throw std::logic_error("family ran out of degree-3 edges");
    g = apply_transformation1(g, edge->first, edge->second);
  }
  if (modified_albertson(g) != spec.predicted() || !is_connected(g)) {
    throw std::logic_error("constructed family member disagrees with its closed form");
  }
  return g;
}

Graph construct_h_prime() {
  Graph g = subdivide_edge(make_named_graph(NamedGraph::complete, 5), 0, 1);
  attach_pendant(g, 5);
  if (modified_albertson(g) != 22) {
    throw std::logic_error("H' construction does not have index 22");
  }
  return g;
}

bool realizable(Index target) {
  if (target < 0 || target % 2 != 0) return false;
  const Index t = target / 2;
  return t == 0 || t == 3 || t == 4 || t == 5 || t >= 8;
}

WitnessSet realize(Index target, std::size_t count) {
  if (target < 0 || target % 2 != 0) {
    throw InputError("target must be a non-negative even integer, got " +
                     std::to_string(target));
  }
  if (count == 0) throw InputError("witness count must be at least 1");
  if (!realizable(target)) {
    throw UnsupportedValue("no construction for target " + std::to_string(target) +
                           "; constructible values are 2t for t in {0,3,4,5} or t >= 8");
  }

  WitnessSet set{target, {}};
  set.witnesses.reserve(count);
  auto push = [&](Graph g, std::string recipe) {
    if (modified_albertson(g) != target || !is_connected(g)) {
      throw std::logic_error("witness '" + recipe + "' failed verification");
    }
    set.witnesses.push_back({std::move(g), std::move(recipe)});
  };

  if (target == 0) {
    for (std::size_t r = 0; r < count; ++r) {
      push(make_named_graph(NamedGraph::cycle, 3 + r), "C_" + std::to_string(3 + r));
    }
  } else if (target == 6 || target == 22) {
    const Graph seed = target == 6 ? make_named_graph(NamedGraph::path, 3)
                                   : construct_h_prime();
    const std::string name = target == 6 ? "P_3" : "H'";
    const Vertex leaf = target == 6 ? 0 : 6;
    Graph g = seed;
    for (std::size_t r = 0; r < count; ++r) {
      if (r > 0) g = extend_pendant(std::move(g), leaf, 1);
      push(g, with_subdivisions(name, r));
    }
  } else if (target % 10 == 0) {
    FamilySpec spec{static_cast<std::size_t>(target / 10), 0, 0};
    const std::size_t first_size = spec.effective_base_size();
    for (std::size_t r = 0; r < count; ++r) {
      spec.base_size = first_size + r;
      push(construct_family(spec), family_recipe(spec));
    }
  } else {
    // target ≡ 40 - 8j (mod 10) picks the variant; the rest is i steps of 10.
    std::size_t j = 1;
    while ((40 - 8 * static_cast<Index>(j) - target) % 10 != 0) ++j;
    const FamilySpec spec{
        static_cast<std::size_t>((target + 8 * static_cast<Index>(j) - 40) / 10), j, 3};
    const Graph base = construct_family(spec);
    const Vertex leaf = first_pendant(base);
    Graph g = base;
    for (std::size_t r = 0; r < count; ++r) {
      if (r > 0) g = extend_pendant(std::move(g), leaf, 1);
      push(g, with_subdivisions(family_recipe(spec), r));
    }
  }
  return set;
}

}  // namespace albertson
