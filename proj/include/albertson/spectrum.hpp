#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "albertson/invariants.hpp"

namespace albertson {

inline constexpr std::size_t kMaxSweepOrder = 8;

struct OrderSlice {
  std::uint64_t labeled_graphs = 0;
  std::uint64_t connected_graphs = 0;
  std::set<Index> attained;

  bool operator==(const OrderSlice&) const = default;
};

/**
 * Values of the modified index over every labeled connected graph on
 * 1..n_max vertices.
 *
 * `witnesses` keeps, per value, the graph6 of the first graph reaching it:
 * smallest order, then smallest edge mask (bit k of the mask is the k-th
 * upper-triangle cell in graph6 column order).
 */
struct SpectrumReport {
  std::size_t n_max = 0;
  std::set<Index> attained;
  std::set<Index> odd_values;
  /// Even values in [0, max attained] that no graph reached.
  std::set<Index> gap_values;
  std::map<std::size_t, OrderSlice> per_order;
  std::map<Index, std::string> witnesses;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Exhaustive sweep; InputError unless 1 <= n_max <= kMaxSweepOrder and
/// workers >= 1. The report does not depend on `workers`.
SpectrumReport sweep_connected(std::size_t n_max, std::size_t workers = 1);

}  // namespace albertson
