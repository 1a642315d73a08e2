#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbal/graph.hpp"

namespace dbal {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// All-pairs geodesic distances; kUnreachable marks pairs in different
/// components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

  bool connected() const {
    return std::none_of(d_.begin(), d_.end(), [](Distance x) { return x == kUnreachable; });
  }

  /// Diameter of a connected graph.
  Distance diameter() const {
    require_connected("diameter");
    return n_ == 0 ? 0 : *std::max_element(d_.begin(), d_.end());
  }

  Distance eccentricity(Vertex v) const {
    Distance e = 0;
    for (Vertex w = 0; w < n_; ++w) e = std::max(e, (*this)(v, w));
    return e;
  }

  void require_connected(const char* what) const {
    if (!connected()) throw GraphError(std::string(what) + ": graph is disconnected");
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

/// Bitset BFS from every vertex.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    VertexSet seen(n), frontier(n);
    seen.insert(s);
    frontier.insert(s);
    Distance k = 0;
    while (!frontier.empty()) {
      frontier.for_each([&](Vertex v) { d.at(s, v) = k; });
      VertexSet next(n);
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= seen;
      seen |= next;
      frontier = std::move(next);
      ++k;
    }
  }
  return d;
}

/// N_0(x), N_1(x), ...: vertices at exact distance k from x, up to the
/// eccentricity of x inside its component.
inline std::vector<VertexSet> shells(const DistanceMatrix& d, Vertex x) {
  const std::size_t n = d.order();
  std::vector<VertexSet> out;
  for (Vertex y = 0; y < n; ++y) {
    const Distance k = d(x, y);
    if (k == kUnreachable) continue;
    while (out.size() <= k) out.emplace_back(n);
    out[k].insert(y);
  }
  return out;
}

/// N_k[x] from a shell sequence; empty when k < 0.
inline VertexSet closed_ball(const std::vector<VertexSet>& sh, long k) {
  VertexSet ball(sh.empty() ? 0 : sh.front().universe());
  for (long i = 0; i <= k && i < static_cast<long>(sh.size()); ++i) ball |= sh[i];
  return ball;
}

// ---------------------------------------------------------------------------
// W-sets

struct WPartition {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet closer_u;     ///< W_uv
  VertexSet equidistant;  ///< uW_v
  VertexSet closer_v;     ///< W_vu
};

struct WCounts {
  std::size_t closer_u = 0;
  std::size_t equidistant = 0;
  std::size_t closer_v = 0;
};

namespace detail {
inline void check_pair(const DistanceMatrix& d, Vertex u, Vertex v) {
  if (u >= d.order() || v >= d.order()) throw GraphError("vertex out of range");
  if (u == v) throw GraphError("W-partition needs two distinct vertices");
  if (d(u, v) == kUnreachable) throw GraphError("W-partition of a disconnected pair");
}
}  // namespace detail

inline WPartition w_partition(const DistanceMatrix& d, Vertex u, Vertex v) {
  detail::check_pair(d, u, v);
  const std::size_t n = d.order();
  WPartition p{u, v, VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex x = 0; x < n; ++x) {
    const Distance du = d(u, x), dv = d(v, x);
    if (du < dv)
      p.closer_u.insert(x);
    else if (dv < du)
      p.closer_v.insert(x);
    else
      p.equidistant.insert(x);
  }
  return p;
}

/// Cardinalities only; no precondition checks, for inner loops.
inline WCounts w_counts(const DistanceMatrix& d, Vertex u, Vertex v) {
  WCounts c;
  for (Vertex x = 0; x < d.order(); ++x) {
    const Distance du = d(u, x), dv = d(v, x);
    if (du < dv)
      ++c.closer_u;
    else if (dv < du)
      ++c.closer_v;
    else
      ++c.equidistant;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Balance verdicts

enum class Balance { balanced, unbalanced, not_applicable };

inline const char* to_string(Balance b) {
  switch (b) {
    case Balance::balanced: return "balanced";
    case Balance::unbalanced: return "unbalanced";
    case Balance::not_applicable: return "not-applicable";
  }
  return "?";
}

struct BalanceVerdict {
  Balance status = Balance::not_applicable;
  /// First pair (u < v, lexicographic) at distance l with |W_uv| != |W_vu|.
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::size_t witness_closer_u = 0;
  std::size_t witness_closer_v = 0;

  bool balanced() const { return status == Balance::balanced; }
};

/// l-distance-balance of a connected graph. l outside [1, diam] is
/// reported as Balance::not_applicable, never as vacuously balanced.
inline BalanceVerdict is_l_distance_balanced(const DistanceMatrix& d, std::size_t l) {
  d.require_connected("l-distance-balance");
  BalanceVerdict out;
  if (l < 1 || l > d.diameter()) return out;
  out.status = Balance::balanced;
  const std::size_t n = d.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (d(u, v) != l) continue;
      const auto c = w_counts(d, u, v);
      if (c.closer_u != c.closer_v) {
        out.status = Balance::unbalanced;
        out.witness = {u, v};
        out.witness_closer_u = c.closer_u;
        out.witness_closer_v = c.closer_v;
        return out;
      }
    }
  return out;
}

inline BalanceVerdict is_l_distance_balanced(const Graph& g, std::size_t l) {
  return is_l_distance_balanced(all_pairs_distances(g), l);
}

struct BalanceProfile {
  Distance diameter = 0;
  /// by_distance[l-1] is the verdict for l = 1..diameter.
  std::vector<BalanceVerdict> by_distance;

  const BalanceVerdict& at(std::size_t l) const { return by_distance.at(l - 1); }

  bool highly_balanced() const {
    return std::all_of(by_distance.begin(), by_distance.end(),
                       [](const BalanceVerdict& v) { return v.balanced(); });
  }
};

inline BalanceProfile balance_profile(const DistanceMatrix& d) {
  d.require_connected("balance profile");
  BalanceProfile p;
  p.diameter = d.diameter();
  p.by_distance.resize(p.diameter);
  for (auto& v : p.by_distance) v.status = Balance::balanced;
  const std::size_t n = d.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto& verdict = p.by_distance[d(u, v) - 1];
      if (verdict.witness) continue;
      const auto c = w_counts(d, u, v);
      if (c.closer_u != c.closer_v) {
        verdict.status = Balance::unbalanced;
        verdict.witness = {u, v};
        verdict.witness_closer_u = c.closer_u;
        verdict.witness_closer_v = c.closer_v;
      }
    }
  return p;
}

inline BalanceProfile balance_profile(const Graph& g) {
  return balance_profile(all_pairs_distances(g));
}

// ---------------------------------------------------------------------------
// Degree structure

struct LocalRegularity {
  bool locally_regular = true;
  /// First non-adjacent pair (u < v) with different degrees.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Every pair of distinct non-adjacent vertices has equal degree.
/// Connectivity is not required.
inline LocalRegularity is_locally_regular(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && g.degree(u) != g.degree(v)) return {false, std::pair{u, v}};
  return {};
}

/// Whether all pairs at distance exactly l have equal degree.
inline bool equal_degrees_at_distance(const Graph& g, const DistanceMatrix& d, Distance l) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d(u, v) == l && g.degree(u) != g.degree(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Shell-sum characterization

struct ShellSums {
  std::size_t lhs = 0;  ///< sum_{k=1}^{d-1} |N_k(a) \ N_{k-1}[b]|
  std::size_t rhs = 0;  ///< same with a and b swapped
};

/// d is the diameter of the (connected) graph; the sums stop at k = d-1.
inline ShellSums prop_char_sums(const DistanceMatrix& d, Vertex a, Vertex b) {
  detail::check_pair(d, a, b);
  const Distance diam = d.diameter();
  const auto sa = shells(d, a), sb = shells(d, b);
  ShellSums s;
  for (Distance k = 1; k + 1 <= diam; ++k) {
    if (k < sa.size()) s.lhs += (sa[k] - closed_ball(sb, static_cast<long>(k) - 1)).size();
    if (k < sb.size()) s.rhs += (sb[k] - closed_ball(sa, static_cast<long>(k) - 1)).size();
  }
  return s;
}

/// The same sums computed from the distance matrix without building shells.
inline ShellSums prop_char_sums_fast(const DistanceMatrix& d, Vertex a, Vertex b, Distance diam) {
  ShellSums s;
  for (Vertex x = 0; x < d.order(); ++x) {
    const Distance da = d(a, x), db = d(b, x);
    // x is counted at k = d(a,x) when 1 <= k <= diam-1 and d(b,x) > k-1.
    if (da >= 1 && da + 1 <= diam && db + 1 > da) ++s.lhs;
    if (db >= 1 && db + 1 <= diam && da + 1 > db) ++s.rhs;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Join-of-regular-graphs classification

enum class JoinClass { regular, nonregular_join_of_regulars, neither };

inline const char* to_string(JoinClass c) {
  switch (c) {
    case JoinClass::regular: return "regular";
    case JoinClass::nonregular_join_of_regulars: return "nonregular-join-of-regulars";
    case JoinClass::neither: return "neither";
  }
  return "?";
}

struct JoinClassification {
  JoinClass kind = JoinClass::neither;
  /// Finest join factors: the vertex sets of the components of the complement.
  std::vector<VertexSet> parts;
};

inline JoinClassification classify_join_of_regulars(const Graph& g) {
  JoinClassification out;
  out.parts = connected_components(complement(g));
  if (is_regular(g)) {
    out.kind = JoinClass::regular;
    return out;
  }
  if (out.parts.size() < 2) return out;
  const bool all_regular = std::all_of(out.parts.begin(), out.parts.end(), [&](const VertexSet& p) {
    return is_regular(induced_subgraph(g, p));
  });
  out.kind = all_regular ? JoinClass::nonregular_join_of_regulars : JoinClass::neither;
  return out;
}

}  // namespace dbal
