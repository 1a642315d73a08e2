#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbal/vertex_set.hpp"

namespace dbal {

/// Raised for malformed graph input: bad endpoints, loops, bad encodings,
/// and graphs that violate an operation's structural precondition.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset per vertex. Symmetry and irreflexivity
/// are established by GraphBuilder and never change afterwards, so a Graph
/// can be shared freely between threads.
class Graph {
 public:
  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(order());
    for (Vertex v = 0; v < order(); ++v) out[v] = degree(v);
    return out;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      adj_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<VertexSet> adj, std::size_t edges)
      : adj_(std::move(adj)), edge_count_(edges) {}

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
  std::string label_;
};

/// Accumulates edges and produces a Graph. Duplicate edges collapse;
/// loops and out-of-range endpoints throw.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
  }

  std::size_t order() const { return n_; }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0," + std::to_string(n_) + ")");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (!adj_[u].contains(v)) {
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++edges_;
    }
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }

  Graph build() && { return Graph(std::move(adj_), edges_); }
  Graph build() const& { return Graph(adj_, edges_); }

 private:
  std::size_t n_;
  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// ---------------------------------------------------------------------------
// Standard families

inline Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

/// K_{1,n-1}: vertex 0 is the centre.
inline Graph star_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

/// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("complete bipartite parts must be nonempty");
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) gb.add_edge(u, v);
  return std::move(gb).build();
}

/// Hub 0 joined to a cycle on 1..n-1; n counts the hub.
inline Graph wheel_graph(std::size_t n) {
  if (n < 4) throw GraphError("wheel needs at least 4 vertices");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    b.add_edge(0, v);
    b.add_edge(v, v + 1 < n ? v + 1 : 1);
  }
  return std::move(b).build();
}

/// Build a named family. Recognized names: complete, cycle, path, star,
/// complete_bipartite (alias cbip), wheel, empty.
inline Graph generate(std::string_view family, std::span<const std::size_t> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw GraphError("family '" + std::string(family) + "' expects " + std::to_string(k) +
                       " parameter(s)");
  };
  auto positive = [&](std::size_t n) {
    if (n == 0) throw GraphError("family '" + std::string(family) + "' needs n >= 1");
    return n;
  };
  if (family == "complete_bipartite" || family == "cbip") {
    need(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  need(1);
  const std::size_t n = params[0];
  if (family == "complete") return complete_graph(positive(n));
  if (family == "cycle") return cycle_graph(n);
  if (family == "path") return path_graph(positive(n));
  if (family == "star") return star_graph(positive(n));
  if (family == "empty") return empty_graph(positive(n));
  if (family == "wheel") return wheel_graph(n);
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

// ---------------------------------------------------------------------------
// Derived graphs

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Disjoint union of the parts plus every edge between distinct parts.
/// Vertex blocks follow list order.
inline Graph join_graphs(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("join of an empty list of graphs");
  std::size_t n = 0;
  std::vector<std::size_t> offset;
  for (const auto& p : parts) {
    offset.push_back(n);
    n += p.order();
  }
  GraphBuilder b(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i].edges()) b.add_edge(offset[i] + u, offset[i] + v);
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (Vertex u = 0; u < parts[i].order(); ++u)
        for (Vertex v = 0; v < parts[j].order(); ++v) b.add_edge(offset[i] + u, offset[j] + v);
  }
  return std::move(b).build();
}

inline Graph join_graphs(std::initializer_list<Graph> parts) {
  return join_graphs(std::span<const Graph>(parts.begin(), parts.size()));
}

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const auto vs = keep.to_vector();
  std::vector<Vertex> pos(g.order(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  GraphBuilder b(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    (g.neighbors(vs[i]) & keep).for_each([&](Vertex w) {
      if (vs[i] < w) b.add_edge(i, pos[w]);
    });
  return std::move(b).build();
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
  if (g.order() < 2) throw GraphError("cannot remove the only vertex of a graph");
  auto keep = VertexSet::full(g.order());
  keep.erase(v);
  return induced_subgraph(g, keep);
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  for (Vertex s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n), frontier(n);
    comp.insert(s);
    frontier.insert(s);
    while (!frontier.empty()) {
      VertexSet next(n);
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

inline bool is_regular(const Graph& g) {
  const auto d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

inline bool is_universal(const Graph& g, Vertex v) { return g.degree(v) + 1 == g.order(); }

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then m lines "u v".
// Unlike build_graph, a repeated edge here means the file describes a
// multigraph and is rejected.

inline Graph parse_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list: expected header 'n m'");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v))
      throw GraphError("edge list: expected " + std::to_string(m) + " edges, read " +
                       std::to_string(i));
    if (u < 0 || v < 0) throw GraphError("edge list: negative vertex id");
    if (static_cast<std::size_t>(u) < n && static_cast<std::size_t>(v) < n &&
        b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw GraphError("edge list: repeated edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw GraphError("edge list: trailing content '" + rest + "'");
  return std::move(b).build();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace dbal
