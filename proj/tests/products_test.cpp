#include <gtest/gtest.h>

#include "dbal/enumerate.hpp"
#include "dbal/products.hpp"
#include "oracle.hpp"

using namespace dbal;

namespace {

DistanceMatrix dist(const Graph& g) { return all_pairs_distances(g); }

std::vector<Graph> small_connected(std::size_t max_n) { return collect_graphs(1, max_n, true); }

}  // namespace

TEST(Cartesian, Examples) {
  // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
  EXPECT_EQ(cartesian(complete_graph(2), complete_graph(2)).graph(),
            build_graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
  const auto k2c4 = cartesian(complete_graph(2), cycle_graph(4)).graph();
  EXPECT_EQ(k2c4.order(), 8u);
  EXPECT_TRUE(is_regular(k2c4));
  EXPECT_EQ(k2c4.degree(0), 3u);
  EXPECT_EQ(dist(k2c4).diameter(), 3u);
  EXPECT_EQ(cartesian(complete_graph(1), cycle_graph(5)).graph(), cycle_graph(5));
}

TEST(Lexicographic, Examples) {
  EXPECT_EQ(lexicographic(complete_graph(2), complete_graph(2)).graph(), complete_graph(4));
  const auto p3e2 = lexicographic(path_graph(3), empty_graph(2)).graph();
  EXPECT_EQ(p3e2.degrees(), (std::vector<std::size_t>{2, 2, 4, 4, 2, 2}));
  EXPECT_EQ(p3e2.size(), 8u);
  EXPECT_EQ(dist(p3e2).diameter(), 2u);
  EXPECT_EQ(lexicographic(path_graph(4), complete_graph(1)).graph(), path_graph(4));
}

TEST(Corona, Examples) {
  // roots 0,1; pendant 2 on 0, pendant 3 on 1: the path 2-0-1-3
  const auto k2k1 = corona(complete_graph(2), complete_graph(1)).graph();
  EXPECT_EQ(k2k1, build_graph(4, {{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(dist(k2k1).diameter(), 3u);
  EXPECT_EQ(corona(complete_graph(1), cycle_graph(4)).graph(),
            join_graphs({complete_graph(1), cycle_graph(4)}));
  EXPECT_EQ(dist(corona(path_graph(3), complete_graph(1)).graph()).diameter(), 4u);
}

TEST(ProductGraph, IndexingRoundTrip) {
  const auto g = path_graph(3);
  const auto h = cycle_graph(4);
  for (const auto& p : {cartesian(g, h), lexicographic(g, h), corona(g, h)}) {
    for (Vertex v = 0; v < p.graph().order(); ++v) EXPECT_EQ(p.index(p.vertex(v)), v);
  }
  const auto c = corona(g, h);
  EXPECT_EQ(c.index({1, std::nullopt}), 1u);
  EXPECT_EQ(c.index({1, 2}), 3u + 4u + 2u);
  EXPECT_TRUE(c.vertex(2).is_root());
  EXPECT_EQ(c.second_layer(0).size(), 4u);
  EXPECT_EQ(c.first_layer(std::nullopt), VertexSet::of(15, {0, 1, 2}));
  const auto x = cartesian(g, h);
  EXPECT_EQ(x.index({2, 3}), 11u);
  EXPECT_EQ(x.first_layer(1), VertexSet::of(12, {1, 5, 9}));
}

// Each closed-form distance against BFS over every factor pair up to a size.
TEST(DistanceFormula, ExhaustiveSmallFactors) {
  const auto gs = small_connected(4);
  const auto hs = collect_graphs(1, 3, false);
  std::size_t lex_pairs = 0;
  for (const auto& g : gs)
    for (const auto& h : hs) {
      const auto c = validate_distance_formula(cartesian(g, h));
      EXPECT_EQ(c.mismatches, 0u);
      const auto k = validate_distance_formula(corona(g, h));
      EXPECT_EQ(k.mismatches, 0u);
      if (g.order() >= 2) {
        const auto l = validate_distance_formula(lexicographic(g, h));
        EXPECT_EQ(l.mismatches, 0u);
        lex_pairs += l.pairs_checked;
      }
    }
  EXPECT_GT(lex_pairs, 0u);
}

// The checker does notice a wrong matrix.
TEST(DistanceFormula, DetectsMismatch) {
  const auto p = cartesian(complete_graph(2), path_graph(3));
  const auto wrong = all_pairs_distances(complete_graph(6));
  const auto f = validate_distance_formula(p, wrong);
  EXPECT_GT(f.mismatches, 0u);
  ASSERT_TRUE(f.first_mismatch);
  EXPECT_EQ(*f.first_mismatch, (std::pair<Vertex, Vertex>{0, 2}));
  EXPECT_EQ(f.expected, 2u);
  EXPECT_EQ(f.actual, 1u);
}

TEST(DistanceFormula, LexNeedsTwoVertexFirstFactor) {
  const auto p = lexicographic(complete_graph(1), empty_graph(2));
  EXPECT_THROW(validate_distance_formula(p), GraphError);
}

TEST(LexWCount, Examples) {
  const auto p4 = dist(path_graph(4));
  EXPECT_EQ(lex_w_count(p4, 2, 0, 3), 4u);
  EXPECT_EQ(lex_w_count(p4, 3, 0, 3), 6u);
  EXPECT_EQ(lex_w_count(dist(path_graph(5)), 1, 0, 3), 2u);
  EXPECT_THROW(lex_w_count(p4, 2, 0, 2), GraphError);
}

// |W_xy| in G[H] equals |W_{g1g2}| * |V(H)| whenever d_G(g1,g2) >= 3.
TEST(LexWCount, MatchesBuiltProduct) {
  for (const auto& g : collect_graphs(4, 6, true)) {
    const auto dg = dist(g);
    if (dg.diameter() < 3) continue;
    for (const auto& h : collect_graphs(1, 3, false)) {
      const auto p = lexicographic(g, h);
      const auto fw = oracle::floyd_warshall(p.graph());
      for (Vertex g1 = 0; g1 < g.order(); ++g1)
        for (Vertex g2 = 0; g2 < g.order(); ++g2) {
          if (dg(g1, g2) < 3) continue;
          const auto want = lex_w_count(dg, h.order(), g1, g2);
          for (Vertex h1 = 0; h1 < h.order(); ++h1)
            for (Vertex h2 = 0; h2 < h.order(); ++h2)
              ASSERT_EQ(oracle::w_count(fw, p.index({g1, h1}), p.index({g2, h2})), want);
        }
    }
  }
}

TEST(CartMembership, Examples) {
  const auto dh = dist(path_graph(3));
  // z in the x layer, equidistant in H: still closer to x
  EXPECT_EQ(cart_membership(2, dh, {0, 0}, {1, 2}, {0, 1}), Side::closer_x);
  EXPECT_EQ(cart_membership(2, dh, {0, 0}, {1, 2}, {1, 1}), Side::closer_y);
  EXPECT_EQ(cart_membership(2, dh, {0, 0}, {1, 0}, {0, 2}), Side::closer_x);
  EXPECT_EQ(cart_membership(3, dh, {0, 0}, {1, 0}, {2, 1}), Side::equidistant);
  EXPECT_THROW(cart_membership(1, dh, {0, 0}, {0, 1}, {0, 2}), GraphError);
  EXPECT_THROW(cart_membership(2, dh, {0, std::nullopt}, {0, 1}, {0, 2}), GraphError);
  EXPECT_THROW(cart_membership(2, dh, {2, 0}, {0, 1}, {0, 2}), GraphError);
}

TEST(CartMembership, SameLayerReducesToWPartition) {
  const auto h = oracle::paw();
  const auto dh = dist(h);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 4; ++b) {
      if (a == b) continue;
      const auto w = w_partition(dh, a, b);
      for (Vertex z = 0; z < 4; ++z) {
        const Side s = cart_membership(3, dh, {1, a}, {1, b}, {1, z});
        EXPECT_EQ(s == Side::closer_x, w.closer_u.contains(z));
        EXPECT_EQ(s == Side::closer_y, w.closer_v.contains(z));
      }
    }
}

TEST(CartMembership, MatchesBfsOnBuiltProduct) {
  for (const auto& h : small_connected(5))
    for (std::size_t n : {2u, 3u}) {
      const auto dh = dist(h);
      const auto p = cartesian(complete_graph(n), h);
      const auto fw = oracle::floyd_warshall(p.graph());
      const std::size_t np = p.graph().order();
      for (Vertex x = 0; x < np; ++x)
        for (Vertex y = 0; y < np; ++y)
          for (Vertex z = 0; z < np; ++z) {
            const int a = fw[x][z], b = fw[y][z];
            const Side want = a < b ? Side::closer_x : b < a ? Side::closer_y : Side::equidistant;
            ASSERT_EQ(cart_membership(n, dh, p.vertex(x), p.vertex(y), p.vertex(z)), want);
          }
    }
}

TEST(Eq3Counts, Examples) {
  const auto c5 = eq3_counts(dist(cycle_graph(5)), 0, 1);
  EXPECT_EQ(c5.left, 2u);
  EXPECT_EQ(c5.right, 2u);
  EXPECT_TRUE(c5.equal());
  const auto p4 = eq3_counts(dist(path_graph(4)), 0, 1);
  EXPECT_EQ(p4.left, 1u);
  EXPECT_EQ(p4.right, 3u);
}

TEST(CoronaConditionIII, Examples) {
  const auto p4 = corona_condition_iii(dist(path_graph(4)), 0, 2);
  EXPECT_EQ(p4.left, 1u);
  EXPECT_EQ(p4.right, 3u);
  const auto k2 = corona_condition_iii(dist(complete_graph(2)), 0, 1);
  EXPECT_EQ(k2.left, 0u);
  EXPECT_EQ(k2.right, 1u);
}

TEST(FivePartition, Examples) {
  const auto c6 = distance_partition_five(dist(cycle_graph(6)), 0, 2);
  EXPECT_EQ(c6.equidistant, VertexSet::of(6, {1, 4}));
  EXPECT_EQ(c6.closer_u_by_2, VertexSet::of(6, {0, 5}));
  EXPECT_EQ(c6.closer_v_by_2, VertexSet::of(6, {2, 3}));
  const auto p4 = distance_partition_five(dist(path_graph(4)), 0, 3);
  EXPECT_EQ(p4.closer_u_by_1, VertexSet::of(4, {1}));
  EXPECT_EQ(p4.closer_v_by_1, VertexSet::of(4, {2}));
  EXPECT_EQ(p4.closer_u_by_2, VertexSet::of(4, {0}));
  EXPECT_THROW(distance_partition_five(dist(path_graph(4)), 0, 1), GraphError);
  EXPECT_THROW(distance_partition_five(dist(path_graph(4)), 2, 2), GraphError);
}

TEST(FivePartition, CoversAndRefinesW) {
  for (const auto& g : collect_graphs(3, 6, true)) {
    const auto d = dist(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        if (u == v || d(u, v) < 2) continue;
        const auto p = distance_partition_five(d, u, v);
        const auto w = w_partition(d, u, v);
        EXPECT_EQ(p.closer_u_by_2 | p.closer_u_by_1, w.closer_u);
        EXPECT_EQ(p.closer_v_by_2 | p.closer_v_by_1, w.closer_v);
        EXPECT_EQ(p.equidistant, w.equidistant);
        EXPECT_TRUE((p.closer_u_by_2 & p.closer_u_by_1).empty());
        EXPECT_TRUE(p.closer_u_by_2.contains(u));
        EXPECT_TRUE(p.closer_v_by_2.contains(v));
      }
  }
}
