#pragma once

// Cartesian, lexicographic and corona products, their closed-form distances,
// and the factor-level counting conditions used by the product theorems.
//
// Flat indexing:
//   cartesian / lexicographic: (g, h)   -> g * |V(H)| + h
//   corona:                    (g, root) -> g
//                              (g, h)    -> |V(G)| + g * |V(H)| + h

#include <optional>
#include <string>

#include "dbal/graph.hpp"
#include "dbal/metrics.hpp"

namespace dbal {

enum class ProductKind { cartesian, lexicographic, corona };

inline const char* to_string(ProductKind k) {
  switch (k) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::corona: return "corona";
  }
  return "?";
}

/// A vertex (g, h) of a product. An empty h is the corona root (g, 0).
struct ProductVertex {
  Vertex g = 0;
  std::optional<Vertex> h;

  bool is_root() const { return !h.has_value(); }
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

class ProductGraph {
 public:
  ProductGraph(ProductKind kind, Graph first, Graph second, Graph product)
      : kind_(kind),
        first_(std::move(first)),
        second_(std::move(second)),
        graph_(std::move(product)) {}

  ProductKind kind() const { return kind_; }
  const Graph& graph() const { return graph_; }
  const Graph& first() const { return first_; }
  const Graph& second() const { return second_; }

  Vertex index(ProductVertex x) const {
    const std::size_t ng = first_.order(), nh = second_.order();
    if (x.g >= ng || (x.h && *x.h >= nh)) throw GraphError("product vertex out of range");
    if (kind_ == ProductKind::corona) return x.h ? ng + x.g * nh + *x.h : x.g;
    if (!x.h) throw GraphError("root vertices exist only in corona products");
    return x.g * nh + *x.h;
  }

  ProductVertex vertex(Vertex v) const {
    const std::size_t ng = first_.order(), nh = second_.order();
    if (v >= graph_.order()) throw GraphError("product vertex index out of range");
    if (kind_ == ProductKind::corona) {
      if (v < ng) return {v, std::nullopt};
      return {(v - ng) / nh, (v - ng) % nh};
    }
    return {v / nh, v % nh};
  }

  /// The H-layer ^gH (cartesian/lexicographic) or the private H-copy of
  /// root g (corona).
  VertexSet second_layer(Vertex g) const {
    VertexSet s(graph_.order());
    for (Vertex h = 0; h < second_.order(); ++h) s.insert(index({g, h}));
    return s;
  }

  /// The G-layer G^h; for corona, h = nullopt gives the root copy of G.
  VertexSet first_layer(std::optional<Vertex> h) const {
    VertexSet s(graph_.order());
    for (Vertex g = 0; g < first_.order(); ++g) s.insert(index({g, h}));
    return s;
  }

 private:
  ProductKind kind_;
  Graph first_;
  Graph second_;
  Graph graph_;
};

inline ProductGraph cartesian(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  GraphBuilder b(ng * nh);
  for (Vertex x = 0; x < ng; ++x)
    for (auto [u, v] : h.edges()) b.add_edge(x * nh + u, x * nh + v);
  for (auto [u, v] : g.edges())
    for (Vertex y = 0; y < nh; ++y) b.add_edge(u * nh + y, v * nh + y);
  return {ProductKind::cartesian, g, h, std::move(b).build()};
}

inline ProductGraph lexicographic(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  GraphBuilder b(ng * nh);
  for (Vertex x = 0; x < ng; ++x)
    for (auto [u, v] : h.edges()) b.add_edge(x * nh + u, x * nh + v);
  for (auto [u, v] : g.edges())
    for (Vertex y1 = 0; y1 < nh; ++y1)
      for (Vertex y2 = 0; y2 < nh; ++y2) b.add_edge(u * nh + y1, v * nh + y2);
  return {ProductKind::lexicographic, g, h, std::move(b).build()};
}

inline ProductGraph corona(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  GraphBuilder b(ng + ng * nh);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (Vertex x = 0; x < ng; ++x) {
    const Vertex base = ng + x * nh;
    for (auto [u, v] : h.edges()) b.add_edge(base + u, base + v);
    for (Vertex y = 0; y < nh; ++y) b.add_edge(x, base + y);
  }
  return {ProductKind::corona, g, h, std::move(b).build()};
}

// ---------------------------------------------------------------------------
// Closed-form distances

/// Distance between two product vertices from factor data alone.
///   cartesian:      d_G + d_H
///   lexicographic:  d_G if g1 != g2; else 0, 1 or 2 by adjacency in H
///                   (only valid when |V(G)| >= 2)
///   corona:         g1 != g2: d_G + [h1 not root] + [h2 not root]
///                   g1 == g2: 0, 1 (one root, or adjacent in H), else 2
inline Distance product_distance_formula(const ProductGraph& p, const DistanceMatrix& dg,
                                         const DistanceMatrix& dh, ProductVertex x,
                                         ProductVertex y) {
  const Graph& h = p.second();
  switch (p.kind()) {
    case ProductKind::cartesian: {
      const Distance a = dg(x.g, y.g), b = dh(*x.h, *y.h);
      return a == kUnreachable || b == kUnreachable ? kUnreachable : a + b;
    }
    case ProductKind::lexicographic:
      if (p.first().order() < 2)
        throw GraphError("lexicographic distance formula needs |V(G)| >= 2");
      if (x.g != y.g) return dg(x.g, y.g);
      if (*x.h == *y.h) return 0;
      return h.adjacent(*x.h, *y.h) ? 1 : 2;
    case ProductKind::corona:
      if (x.g != y.g) {
        const Distance a = dg(x.g, y.g);
        if (a == kUnreachable) return kUnreachable;
        return a + (x.h ? 1 : 0) + (y.h ? 1 : 0);
      }
      if (x == y) return 0;
      if (!x.h || !y.h) return 1;
      return h.adjacent(*x.h, *y.h) ? 1 : 2;
  }
  return kUnreachable;
}

struct FormulaCheck {
  std::size_t pairs_checked = 0;
  std::size_t mismatches = 0;
  std::optional<std::pair<Vertex, Vertex>> first_mismatch;
  Distance expected = 0;  ///< formula value at the first mismatch
  Distance actual = 0;    ///< BFS value at the first mismatch
};

/// Compare BFS distances on the built product against the closed form.
inline FormulaCheck validate_distance_formula(const ProductGraph& p, const DistanceMatrix& dp) {
  const auto dg = all_pairs_distances(p.first());
  const auto dh = all_pairs_distances(p.second());
  FormulaCheck out;
  const std::size_t n = p.graph().order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a; b < n; ++b) {
      ++out.pairs_checked;
      const Distance want = product_distance_formula(p, dg, dh, p.vertex(a), p.vertex(b));
      if (want != dp(a, b)) {
        if (!out.first_mismatch) {
          out.first_mismatch = {a, b};
          out.expected = want;
          out.actual = dp(a, b);
        }
        ++out.mismatches;
      }
    }
  return out;
}

inline FormulaCheck validate_distance_formula(const ProductGraph& p) {
  return validate_distance_formula(p, all_pairs_distances(p.graph()));
}

// ---------------------------------------------------------------------------
// Lexicographic products

/// |W_xy| in G[H] for x = (g1,*), y = (g2,*) with d_G(g1,g2) >= 3:
/// |W_{g1 g2}| * |V(H)|.
inline std::size_t lex_w_count(const DistanceMatrix& dg, std::size_t h_order, Vertex g1,
                               Vertex g2) {
  detail::check_pair(dg, g1, g2);
  if (dg(g1, g2) < 3) throw GraphError("lex_w_count requires d_G(g1,g2) >= 3");
  return w_counts(dg, g1, g2).closer_u * h_order;
}

// ---------------------------------------------------------------------------
// K_n [] H

enum class Side { closer_x, equidistant, closer_y };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::closer_x: return "W_xy";
    case Side::equidistant: return "equidistant";
    case Side::closer_y: return "W_yx";
  }
  return "?";
}

namespace detail {
// z = (g, h) in W_xy by the layer case analysis for K_n [] H.
inline bool cart_in_w(const DistanceMatrix& dh, ProductVertex x, ProductVertex y,
                      ProductVertex z) {
  const Vertex h1 = *x.h, h2 = *y.h, h = *z.h;
  const Distance a = dh(h1, h), b = dh(h2, h);
  const bool in_w = a < b;
  if (x.g == y.g) return in_w;
  if (z.g == x.g) return a <= b;  // W_{h1h2} or equidistant
  if (z.g == y.g) return in_w && a + 1 != b;
  return in_w;
}
}  // namespace detail

/// Classify z relative to (x, y) in K_n [] H using only distances in H.
inline Side cart_membership(std::size_t n, const DistanceMatrix& dh, ProductVertex x,
                            ProductVertex y, ProductVertex z) {
  if (n < 2) throw GraphError("cart_membership requires K_n with n >= 2");
  for (const auto& p : {x, y, z}) {
    if (p.is_root()) throw GraphError("cart_membership: root vertex in a cartesian product");
    if (p.g >= n || *p.h >= dh.order()) throw GraphError("cart_membership: vertex out of range");
  }
  if (detail::cart_in_w(dh, x, y, z)) return Side::closer_x;
  if (detail::cart_in_w(dh, y, x, z)) return Side::closer_y;
  return Side::equidistant;
}

struct CountPair {
  std::size_t left = 0;
  std::size_t right = 0;
  bool equal() const { return left == right; }
};

/// left  = |{h in W_{h1h2} : d(h1,h) = d(h2,h) - 1}|
/// right = |{h in W_{h2h1} : d(h2,h) = d(h1,h) - 1}|
inline CountPair eq3_counts(const DistanceMatrix& dh, Vertex h1, Vertex h2) {
  detail::check_pair(dh, h1, h2);
  CountPair c;
  for (Vertex h = 0; h < dh.order(); ++h) {
    const Distance a = dh(h1, h), b = dh(h2, h);
    if (a < b && a + 1 == b) ++c.left;
    if (b < a && b + 1 == a) ++c.right;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Corona products

/// left  = |{g : d(g1,g) + 2 <= d(g2,g)}|
/// right = |{g : d(g2,g) <= d(g1,g)}|
inline CountPair corona_condition_iii(const DistanceMatrix& dg, Vertex g1, Vertex g2) {
  detail::check_pair(dg, g1, g2);
  CountPair c;
  for (Vertex g = 0; g < dg.order(); ++g) {
    const Distance a = dg(g1, g), b = dg(g2, g);
    if (a + 2 <= b) ++c.left;
    if (b <= a) ++c.right;
  }
  return c;
}

/// Vertices of X split by the offset d(u,x) - d(v,x).
struct FivePartition {
  VertexSet closer_u_by_2;  ///< offset <= -2  (U2)
  VertexSet closer_u_by_1;  ///< offset == -1  (U1)
  VertexSet equidistant;    ///< offset ==  0  (E)
  VertexSet closer_v_by_1;  ///< offset == +1  (V1)
  VertexSet closer_v_by_2;  ///< offset >= +2  (V2)
};

inline FivePartition distance_partition_five(const DistanceMatrix& d, Vertex u, Vertex v) {
  detail::check_pair(d, u, v);
  if (d(u, v) < 2) throw GraphError("five-set partition requires d(u,v) >= 2");
  d.require_connected("five-set partition");
  const std::size_t n = d.order();
  FivePartition p{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex x = 0; x < n; ++x) {
    const long off = static_cast<long>(d(u, x)) - static_cast<long>(d(v, x));
    if (off <= -2)
      p.closer_u_by_2.insert(x);
    else if (off == -1)
      p.closer_u_by_1.insert(x);
    else if (off == 0)
      p.equidistant.insert(x);
    else if (off == 1)
      p.closer_v_by_1.insert(x);
    else
      p.closer_v_by_2.insert(x);
  }
  return p;
}

}  // namespace dbal
