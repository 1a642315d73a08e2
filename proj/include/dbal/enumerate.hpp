#pragma once

// Exhaustive enumeration of labeled simple graphs on a handful of vertices.
//
// A labeled graph on n vertices is identified with an edge mask over the
// n(n-1)/2 vertex pairs, taken in graph6 column order (0,1),(0,2),(1,2),
// (0,3),... so bit k of the mask is the k-th pair. Graphs are produced in
// ascending mask order; no isomorphism rejection is done.

#include <cstdint>
#include <optional>
#include <vector>

#include "dbal/graph.hpp"

namespace dbal {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

using EdgeMask = std::uint32_t;

inline constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline void check_enumeration_order(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw GraphError("enumeration order must lie in [1," + std::to_string(kMaxEnumerationOrder) +
                     "], got " + std::to_string(n));
}

/// One past the largest edge mask on n vertices.
inline std::uint64_t mask_limit(std::size_t n) {
  check_enumeration_order(n);
  return std::uint64_t{1} << pair_count(n);
}

inline Graph graph_from_edge_mask(std::size_t n, EdgeMask mask) {
  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

/// Connectivity straight from the mask, without materializing a Graph.
inline bool edge_mask_connected(std::size_t n, EdgeMask mask) {
  std::uint32_t adj[kMaxEnumerationOrder] = {};
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (Vertex v = 0; v < n; ++v)
      if ((frontier >> v) & 1U) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

/// Single-pass stream over the labeled graphs on n vertices, optionally
/// restricted to connected ones.
class GraphStream {
 public:
  GraphStream(std::size_t n, bool connected_only)
      : n_(n), limit_(mask_limit(n)), connected_only_(connected_only) {}

  std::optional<Graph> next() {
    while (mask_ < limit_) {
      const auto m = static_cast<EdgeMask>(mask_++);
      if (!connected_only_ || edge_mask_connected(n_, m)) return graph_from_edge_mask(n_, m);
    }
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t mask_ = 0;
  bool connected_only_;
};

inline GraphStream enumerate_connected(std::size_t n) { return GraphStream(n, true); }
inline GraphStream enumerate_all(std::size_t n) { return GraphStream(n, false); }

/// Materialize every labeled graph with order in [lo, hi].
inline std::vector<Graph> collect_graphs(std::size_t lo, std::size_t hi, bool connected_only) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    GraphStream s(n, connected_only);
    while (auto g = s.next()) out.push_back(std::move(*g));
  }
  return out;
}

}  // namespace dbal
