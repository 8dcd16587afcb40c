#pragma once

#include <string>
#include <vector>

#include "albertson/graph.hpp"
#include "albertson/invariants.hpp"

namespace albertson {

/**
 * Parameters of a constructed witness H(i, j): a base variant j in 0..4
 * built on a prism with cycles of length `base_size`, followed by i
 * degree-3 subdivisions.
 *
 * Base variants (all connected, every non-pendant vertex of degree 3):
 *   0  the prism itself                                        index 0
 *   1  two vertex-disjoint rungs removed, pendant on each freed end  32
 *   2  vertex 0 removed, pendant on each of its three neighbors      24
 *   3  one rung removed, pendant on each freed end                   16
 *   4  one rung subdivided, pendant on the subdividing vertex         8
 */
struct FamilySpec {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t base_size = 3;

  /// 10i for j = 0, otherwise 2(5i - 4j + 20).
  Index predicted() const;
  /// Smallest size >= base_size (and >= 4 for j = 2) whose base variant has
  /// at least i edges joining two degree-3 vertices.
  std::size_t effective_base_size() const;
};

/// Index of the untransformed base variant j.
Index family_base_value(std::size_t j);

/// Throws InputError for j > 4. The result's index is checked against
/// FamilySpec::predicted and a mismatch raises std::logic_error.
Graph construct_family(const FamilySpec& spec);

/// K_5 with one edge subdivided by x, plus a pendant y on x (index 22).
/// Vertex 5 is x, vertex 6 is y.
Graph construct_h_prime();

struct Witness {
  Graph graph;
  std::string recipe;
};

struct WitnessSet {
  Index target = 0;
  std::vector<Witness> witnesses;
};

/// Values for which realize() has a construction: 2t with t in
/// {0, 3, 4, 5} or t >= 8.
bool realizable(Index target);

/// Thrown by realize() for even targets outside the constructible set.
class UnsupportedValue : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/**
 * Returns `count` connected graphs with pairwise distinct orders whose
 * modified index equals `target`. Each member is verified by direct
 * computation before it is returned.
 *
 * InputError for negative or odd targets and count == 0; UnsupportedValue
 * for 2, 4, 12 and 14.
 */
WitnessSet realize(Index target, std::size_t count);

}  // namespace albertson
