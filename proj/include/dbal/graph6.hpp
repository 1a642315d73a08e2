#pragma once

// graph6 short form (n <= 62). Byte 0 is n + 63; the remaining bytes carry
// the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... six bits per
// byte, most significant bit first, zero padded, each offset by 63.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "dbal/graph.hpp"

namespace dbal {

inline constexpr std::size_t kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw GraphError("graph6 short form supports at most 62 vertices, got " + std::to_string(n));
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(63 + n));
  unsigned acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

/// Parse one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline / carriage return are tolerated.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty input");

  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw GraphError("graph6: non-printable or out-of-range character");
  }
  const auto head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw GraphError("graph6: long form (n > 62) is not supported");
  const std::size_t n = head - 63;
  if (n == 0) throw GraphError("graph6: graphs must have at least one vertex");

  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - 1 < nbytes) throw GraphError("graph6: truncated edge data");
  if (text.size() - 1 > nbytes) throw GraphError("graph6: trailing garbage after edge data");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned byte = static_cast<unsigned char>(text[1 + k / 6]) - 63U;
      if ((byte >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  if (nbits % 6 != 0) {
    const unsigned last = static_cast<unsigned char>(text.back()) - 63U;
    if (last & ((1U << (6 - nbits % 6)) - 1U)) throw GraphError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

/// Read every graph from a graph6 stream: one graph per line, blank lines
/// and '#'-prefixed comment lines skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const GraphError& e) {
      throw GraphError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace dbal
