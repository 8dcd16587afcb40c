#include "albertson/spectrum.hpp"

#include <array>
#include <bit>
#include <thread>
#include <vector>

#include "albertson/graph6.hpp"

namespace albertson {

namespace {

using Row = std::uint32_t;

struct Cell {
  int i;
  int j;
};

// Upper-triangle cells in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<Cell> cells_for(std::size_t n) {
  std::vector<Cell> cells;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i) cells.push_back({i, j});
  }
  return cells;
}

struct Partial {
  std::uint64_t connected = 0;
  std::map<Index, std::uint64_t> first_mask;
};

void scan_range(std::size_t n, const std::vector<Cell>& cells, std::uint64_t begin,
                std::uint64_t end, Partial& out) {
  const Row everyone = (Row{1} << n) - 1;
  std::array<Row, kMaxSweepOrder> rows{};
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    rows.fill(0);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const Cell c = cells[std::countr_zero(bits)];
      rows[c.i] |= Row{1} << c.j;
      rows[c.j] |= Row{1} << c.i;
    }

    // Reachable-set expansion from vertex 0.
    Row reach = 1;
    while (true) {
      Row grown = reach;
      for (Row r = reach; r != 0; r &= r - 1) grown |= rows[std::countr_zero(r)];
      if (grown == reach) break;
      reach = grown;
    }
    if (reach != everyone) continue;

    Index value = 0;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const Cell c = cells[std::countr_zero(bits)];
      value += squared_degree_gap(std::popcount(rows[c.i]), std::popcount(rows[c.j]));
    }
    ++out.connected;
    out.first_mask.try_emplace(value, mask);
  }
}

Graph graph_from_mask(std::size_t n, const std::vector<Cell>& cells, std::uint64_t mask) {
  Graph g(n);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if ((mask >> k) & 1) {
      g.add_edge(static_cast<Vertex>(cells[k].i), static_cast<Vertex>(cells[k].j));
    }
  }
  return g;
}

}  // namespace

SpectrumReport sweep_connected(std::size_t n_max, std::size_t workers) {
  if (n_max < 1 || n_max > kMaxSweepOrder) {
    throw InputError("sweep order must be in 1.." + std::to_string(kMaxSweepOrder) +
                     ", got " + std::to_string(n_max));
  }
  if (workers < 1) throw InputError("workers must be at least 1");

  SpectrumReport report;
  report.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto cells = cells_for(n);
    const std::uint64_t total = std::uint64_t{1} << cells.size();
    const std::size_t parts = static_cast<std::size_t>(
        std::min<std::uint64_t>(workers, total));

    std::vector<Partial> partials(parts);
    std::vector<std::thread> threads;
    threads.reserve(parts);
    for (std::size_t w = 0; w < parts; ++w) {
      const std::uint64_t begin = total * w / parts;
      const std::uint64_t end = total * (w + 1) / parts;
      threads.emplace_back(scan_range, n, std::cref(cells), begin, end,
                           std::ref(partials[w]));
    }
    for (auto& t : threads) t.join();

    // Chunks are contiguous and ordered, so the first chunk holding a value
    // also holds its smallest mask.
    OrderSlice& slice = report.per_order[n];
    slice.labeled_graphs = total;
    for (const Partial& part : partials) {
      slice.connected_graphs += part.connected;
      for (auto [value, mask] : part.first_mask) {
        slice.attained.insert(value);
        if (report.attained.insert(value).second) {
          report.witnesses.emplace(value, emit_graph6(graph_from_mask(n, cells, mask)));
        }
      }
    }
  }

  for (Index v : report.attained) {
    if (v % 2 != 0) report.odd_values.insert(v);
  }
  if (!report.attained.empty()) {
    for (Index v = 0; v <= *report.attained.rbegin(); v += 2) {
      if (!report.attained.contains(v)) report.gap_values.insert(v);
    }
  }
  return report;
}

}  // namespace albertson
