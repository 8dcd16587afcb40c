#include "albertson/graph6.hpp"

namespace albertson {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < kOffset || value > 126) {
    throw FormatError("graph6: byte " + std::to_string(value) +
                      " outside [63, 126]");
  }
  return value - kOffset;
}

std::size_t body_length(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(decode_byte(text[0]));
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw FormatError("graph6: orders >= 258048 are not supported");
    }
    if (text.size() < 4) throw FormatError("graph6: truncated order header");
    for (std::size_t k = 1; k <= 3; ++k) {
      n = (n << 6) | static_cast<std::size_t>(decode_byte(text[k]));
    }
    if (n < 63) throw FormatError("graph6: non-canonical long order header");
    pos = 4;
  }

  const std::string_view body = text.substr(pos);
  const std::size_t expected = body_length(n);
  if (body.size() < expected) throw FormatError("graph6: truncated body");
  if (body.size() > expected) throw FormatError("graph6: trailing bytes after body");

  Graph g(n);
  std::size_t byte_index = 0;
  int current = 0;
  int bits_left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        current = decode_byte(body[byte_index++]);
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1) g.add_edge(i, j);
    }
  }
  if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0) {
    throw FormatError("graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw InputError("graph6: order " + std::to_string(n) + " not supported");
  }
  std::string out;
  out.reserve(4 + body_length(n));
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
  }

  int current = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kOffset));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((current << (6 - filled)) + kOffset));
  }
  return out;
}

}  // namespace albertson
