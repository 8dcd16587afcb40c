#pragma once

#include <string>
#include <string_view>

#include "albertson/graph.hpp"

namespace albertson {

/// Largest order representable in the short and 4-byte graph6 headers.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/**
 * Decodes one graph6 line (a trailing newline and an optional ">>graph6<<"
 * prefix are accepted). Throws FormatError on bytes outside [63, 126], on
 * truncated or overlong bodies, and on nonzero padding bits.
 */
Graph parse_graph6(std::string_view text);

/// Encodes without header or newline. Vertex order is preserved exactly.
std::string emit_graph6(const Graph& g);

}  // namespace albertson
