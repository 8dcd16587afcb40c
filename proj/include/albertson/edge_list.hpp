#pragma once

#include <istream>
#include <ostream>
#include <string_view>

#include "albertson/graph.hpp"

namespace albertson {

/**
 * Edge-list text: a header line "n m", then m lines "u v" with 0-based
 * decimal ids. Blank lines and lines starting with '#' are skipped.
 *
 * Duplicate pairs load leniently and are counted in the result; any other
 * defect (bad token, wrong edge count, out-of-range id, self-loop) raises
 * FormatError with the offending line number.
 */
BuildResult read_edge_list(std::istream& in);
BuildResult parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace albertson
