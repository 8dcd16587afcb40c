#include "albertson/running_index.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace albertson {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

Index greater_neighbors(const Graph& g, Vertex u, std::size_t* work) {
  const std::size_t du = g.degree(u);
  Index count = 0;
  for (Vertex x : g.neighbors(u)) {
    if (g.degree(x) > du) ++count;
  }
  if (work != nullptr) *work += du;
  return count;
}

}  // namespace

Index edge_addition_delta(const Graph& g, Vertex u, Vertex v, std::size_t* work) {
  if (u >= g.order() || v >= g.order()) {
    throw InputError("vertex pair " + pair_text(u, v) + " out of range");
  }
  if (u == v) {
    throw PreconditionError("edge addition needs two distinct vertices, got " +
                            pair_text(u, v));
  }
  if (g.has_edge(u, v)) {
    throw PreconditionError("edge addition needs non-adjacent vertices; " +
                            pair_text(u, v) + " is already an edge");
  }
  if (g.degree(u) < g.degree(v)) std::swap(u, v);
  const Index gu = greater_neighbors(g, u, work);
  const Index gv = greater_neighbors(g, v, work);
  const Index delta = addition_delta_formula(static_cast<Index>(g.degree(u)),
                                             static_cast<Index>(g.degree(v)), gu, gv);
  assert(delta % 2 == 0);
  return delta;
}

RunningIndex::RunningIndex(Graph g)
    : graph_(std::move(g)), current_(modified_albertson(graph_)) {}

Index RunningIndex::insert_edge(Vertex u, Vertex v) {
  std::size_t work = 0;
  const Index delta = edge_addition_delta(graph_, u, v, &work);
  graph_.add_edge(u, v);
  current_ += delta;
  last_work_ = work;
  work_ += work;
  if (current_ % 2 != 0) throw std::logic_error("running index lost parity");
  debug_check();
  return delta;
}

Index RunningIndex::delete_edge(Vertex u, Vertex v) {
  if (u >= graph_.order() || v >= graph_.order()) {
    throw InputError("vertex pair " + pair_text(u, v) + " out of range");
  }
  if (!graph_.has_edge(u, v)) {
    throw PreconditionError("edge deletion needs an existing edge; " +
                            pair_text(u, v) + " is absent");
  }
  graph_.remove_edge(u, v);
  std::size_t work = 0;
  const Index delta = edge_addition_delta(graph_, u, v, &work);
  current_ -= delta;
  last_work_ = work;
  work_ += work;
  if (current_ % 2 != 0) throw std::logic_error("running index lost parity");
  debug_check();
  return -delta;
}

void RunningIndex::debug_check() const {
#ifndef NDEBUG
  assert(consistent());
#endif
}

RunningIndex insert_edge_tracked(RunningIndex ri, Vertex u, Vertex v) {
  ri.insert_edge(u, v);
  return ri;
}

RunningIndex delete_edge_tracked(RunningIndex ri, Vertex u, Vertex v) {
  ri.delete_edge(u, v);
  return ri;
}

}  // namespace albertson
