#include <gtest/gtest.h>

#include "dbal/enumerate.hpp"
#include "dbal/metrics.hpp"
#include "dbal/products.hpp"
#include "oracle.hpp"

using namespace dbal;

namespace {

DistanceMatrix dist(const Graph& g) { return all_pairs_distances(g); }

template <typename F>
void for_each_connected_upto(std::size_t max_n, F&& f) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto s = enumerate_connected(n);
    while (auto g = s.next()) f(*g);
  }
}

}  // namespace

TEST(Distances, Examples) {
  EXPECT_EQ(dist(path_graph(4))(0, 3), 3u);
  const auto c6 = dist(cycle_graph(6));
  EXPECT_EQ(c6(0, 3), 3u);
  EXPECT_EQ(c6(0, 2), 2u);
  const auto cube = dist(cartesian(complete_graph(2), cycle_graph(4)).graph());
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(cube.eccentricity(v), 3u);
}

TEST(Distances, Disconnected) {
  const auto d = dist(empty_graph(2));
  EXPECT_EQ(d(0, 1), kUnreachable);
  EXPECT_FALSE(d.connected());
  EXPECT_THROW(d.diameter(), GraphError);
}

TEST(Distances, MatchFloydWarshall) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const auto g = oracle::random_graph(1 + rng() % 40, 0.12, rng);
    const auto d = dist(g);
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        const int want = fw[u][v] >= oracle::kInf ? -1 : fw[u][v];
        const int got = d(u, v) == kUnreachable ? -1 : static_cast<int>(d(u, v));
        ASSERT_EQ(got, want);
        // d = 1 exactly on edges
        EXPECT_EQ(d(u, v) == 1, g.adjacent(u, v));
      }
  }
}

TEST(Shells, Examples) {
  const auto k4 = shells(dist(complete_graph(4)), 0);
  ASSERT_EQ(k4.size(), 2u);
  EXPECT_EQ(k4[0], VertexSet::of(4, {0}));
  EXPECT_EQ(k4[1], VertexSet::of(4, {1, 2, 3}));

  const auto p4 = shells(dist(path_graph(4)), 0);
  ASSERT_EQ(p4.size(), 4u);
  EXPECT_EQ(p4[1], VertexSet::of(4, {1}));
  EXPECT_EQ(p4[2], VertexSet::of(4, {2}));
  EXPECT_EQ(p4[3], VertexSet::of(4, {3}));
  EXPECT_EQ(closed_ball(p4, 2), VertexSet::of(4, {0, 1, 2}));
  EXPECT_TRUE(closed_ball(p4, -1).empty());

  const auto w6 = shells(dist(wheel_graph(6)), 0);
  EXPECT_EQ(w6[1], VertexSet::of(6, {1, 2, 3, 4, 5}));
}

TEST(WPartition, Examples) {
  const auto c4 = w_partition(dist(cycle_graph(4)), 0, 2);
  EXPECT_EQ(c4.closer_u, VertexSet::of(4, {0}));
  EXPECT_EQ(c4.closer_v, VertexSet::of(4, {2}));
  EXPECT_EQ(c4.equidistant, VertexSet::of(4, {1, 3}));

  const auto dp = dist(path_graph(4));
  const auto a = w_partition(dp, 0, 1);
  EXPECT_EQ(a.closer_u, VertexSet::of(4, {0}));
  EXPECT_EQ(a.closer_v, VertexSet::of(4, {1, 2, 3}));
  const auto b = w_partition(dp, 0, 3);
  EXPECT_EQ(b.closer_u, VertexSet::of(4, {0, 1}));
  EXPECT_EQ(b.closer_v, VertexSet::of(4, {2, 3}));
  EXPECT_TRUE(b.equidistant.empty());
}

TEST(WPartition, Errors) {
  EXPECT_THROW(w_partition(dist(path_graph(3)), 1, 1), GraphError);
  EXPECT_THROW(w_partition(dist(empty_graph(2)), 0, 1), GraphError);
}

TEST(WPartition, PartitionAndSymmetryProperties) {
  for_each_connected_upto(5, [](const Graph& g) {
    const auto d = dist(g);
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        const auto p = w_partition(d, u, v);
        const auto q = w_partition(d, v, u);
        ASSERT_EQ(p.closer_u.size() + p.equidistant.size() + p.closer_v.size(), g.order());
        EXPECT_TRUE((p.closer_u & p.closer_v).empty());
        EXPECT_TRUE(p.closer_u.contains(u));
        EXPECT_TRUE(p.closer_v.contains(v));
        EXPECT_EQ(p.closer_u, q.closer_v);
        EXPECT_EQ(p.closer_u.size(), oracle::w_count(fw, u, v));
        const auto c = w_counts(d, u, v);
        EXPECT_EQ(c.closer_u, p.closer_u.size());
        EXPECT_EQ(c.equidistant, p.equidistant.size());
      }
  });
}

TEST(Balance, Cycle6HighlyBalanced) {
  const auto d = dist(cycle_graph(6));
  for (std::size_t l = 1; l <= 3; ++l) EXPECT_TRUE(is_l_distance_balanced(d, l).balanced()) << l;
}

TEST(Balance, PathFour) {
  const auto d = dist(path_graph(4));
  EXPECT_TRUE(is_l_distance_balanced(d, 3).balanced());
  const auto one = is_l_distance_balanced(d, 1);
  EXPECT_EQ(one.status, Balance::unbalanced);
  EXPECT_EQ(one.witness, (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_EQ(one.witness_closer_u, 1u);
  EXPECT_EQ(one.witness_closer_v, 3u);
  const auto two = is_l_distance_balanced(d, 2);
  EXPECT_EQ(two.status, Balance::unbalanced);
  EXPECT_EQ(two.witness, (std::pair<Vertex, Vertex>{0, 2}));
}

TEST(Balance, CubeHighlyBalanced) {
  const auto cube = cartesian(complete_graph(2), cycle_graph(4)).graph();
  EXPECT_TRUE(balance_profile(cube).highly_balanced());
}

TEST(Balance, OutOfRangeIsNotApplicable) {
  const auto d = dist(cycle_graph(5));
  EXPECT_EQ(is_l_distance_balanced(d, 0).status, Balance::not_applicable);
  EXPECT_EQ(is_l_distance_balanced(d, 3).status, Balance::not_applicable);
  EXPECT_FALSE(is_l_distance_balanced(d, 3).balanced());
  EXPECT_THROW(is_l_distance_balanced(dist(empty_graph(3)), 1), GraphError);
}

TEST(Profile, Examples) {
  const auto k5 = balance_profile(complete_graph(5));
  EXPECT_EQ(k5.diameter, 1u);
  EXPECT_TRUE(k5.highly_balanced());

  const auto p4 = balance_profile(path_graph(4));
  ASSERT_EQ(p4.diameter, 3u);
  EXPECT_FALSE(p4.at(1).balanced());
  EXPECT_FALSE(p4.at(2).balanced());
  EXPECT_TRUE(p4.at(3).balanced());
  EXPECT_FALSE(p4.highly_balanced());

  const auto k23 = balance_profile(complete_bipartite_graph(2, 3));
  ASSERT_EQ(k23.diameter, 2u);
  EXPECT_FALSE(k23.at(1).balanced());
  EXPECT_EQ(k23.at(1).witness, (std::pair<Vertex, Vertex>{0, 2}));
  EXPECT_EQ(k23.at(1).witness_closer_u, 3u);
  EXPECT_EQ(k23.at(1).witness_closer_v, 2u);
  EXPECT_TRUE(k23.at(2).balanced());

  EXPECT_THROW(balance_profile(empty_graph(2)), GraphError);
}

TEST(Profile, MatchesOracleAndWitnessesAreReal) {
  for_each_connected_upto(6, [](const Graph& g) {
    const auto d = dist(g);
    const auto fw = oracle::floyd_warshall(g);
    const auto prof = balance_profile(d);
    ASSERT_EQ(static_cast<int>(prof.diameter), oracle::diameter(fw));
    bool all = true;
    for (std::size_t l = 1; l <= prof.diameter; ++l) {
      const auto& v = prof.at(l);
      const auto single = is_l_distance_balanced(d, l);
      ASSERT_EQ(v.balanced(), *oracle::l_balanced(fw, static_cast<int>(l)));
      ASSERT_EQ(single.status, v.status);
      ASSERT_EQ(single.witness, v.witness);
      if (v.witness) {
        const auto [a, b] = *v.witness;
        EXPECT_LT(a, b);
        EXPECT_EQ(d(a, b), l);
        EXPECT_NE(oracle::w_count(fw, a, b), oracle::w_count(fw, b, a));
      }
      all = all && v.balanced();
    }
    EXPECT_EQ(all, prof.highly_balanced());
  });
}

TEST(Profile, VertexTransitiveFixtures) {
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_TRUE(balance_profile(cycle_graph(n)).highly_balanced());
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_TRUE(balance_profile(complete_graph(n)).highly_balanced());
  auto q = complete_graph(2);
  for (int dim = 2; dim <= 5; ++dim) {
    q = cartesian(q, complete_graph(2)).graph();
    EXPECT_TRUE(balance_profile(q).highly_balanced()) << dim;
  }
}

TEST(LocalRegularity, Examples) {
  EXPECT_TRUE(is_locally_regular(complete_bipartite_graph(2, 3)).locally_regular);
  EXPECT_TRUE(is_locally_regular(wheel_graph(6)).locally_regular);
  const auto paw = is_locally_regular(oracle::paw());
  EXPECT_FALSE(paw.locally_regular);
  ASSERT_TRUE(paw.witness);
  EXPECT_EQ(*paw.witness, (std::pair<Vertex, Vertex>{1, 3}));
  EXPECT_EQ(oracle::paw().degree(3), 1u);
  EXPECT_EQ(oracle::paw().degree(1), 2u);
  EXPECT_TRUE(is_locally_regular(empty_graph(3)).locally_regular);
}

TEST(LocalRegularity, RegularImpliesLocallyRegular) {
  for_each_connected_upto(6, [](const Graph& g) {
    if (is_regular(g)) {
      EXPECT_TRUE(is_locally_regular(g).locally_regular);
    }
  });
  EXPECT_FALSE(is_regular(complete_bipartite_graph(2, 3)));
}

TEST(ShellSums, Examples) {
  const auto p4 = prop_char_sums(dist(path_graph(4)), 0, 3);
  EXPECT_EQ(p4.lhs, 1u);
  EXPECT_EQ(p4.rhs, 1u);
  const auto k3 = prop_char_sums(dist(complete_graph(3)), 0, 1);
  EXPECT_EQ(k3.lhs, 0u);
  EXPECT_EQ(k3.rhs, 0u);
  const auto c4 = prop_char_sums(dist(cycle_graph(4)), 0, 2);
  EXPECT_EQ(c4.lhs, 2u);
  EXPECT_EQ(c4.rhs, 2u);
}

// The difference of the shell sums equals |W_ab| - |W_ba| for every pair,
// and the matrix-based sums equal the set-based ones.
TEST(ShellSums, DifferenceEqualsWDifference) {
  for_each_connected_upto(6, [](const Graph& g) {
    const auto d = dist(g);
    if (g.order() < 2) return;
    const auto fw = oracle::floyd_warshall(g);
    const Distance diam = d.diameter();
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = 0; b < g.order(); ++b) {
        if (a == b) continue;
        const auto s = prop_char_sums(d, a, b);
        const auto f = prop_char_sums_fast(d, a, b, diam);
        ASSERT_EQ(s.lhs, f.lhs);
        ASSERT_EQ(s.rhs, f.rhs);
        const long lhs = static_cast<long>(s.lhs) - static_cast<long>(s.rhs);
        const long rhs = static_cast<long>(oracle::w_count(fw, a, b)) -
                         static_cast<long>(oracle::w_count(fw, b, a));
        ASSERT_EQ(lhs, rhs);
      }
  });
}

TEST(JoinClass, Examples) {
  EXPECT_EQ(classify_join_of_regulars(cycle_graph(5)).kind, JoinClass::regular);
  const auto star = classify_join_of_regulars(star_graph(4));
  EXPECT_EQ(star.kind, JoinClass::nonregular_join_of_regulars);
  ASSERT_EQ(star.parts.size(), 2u);
  EXPECT_EQ(star.parts[0], VertexSet::of(4, {0}));
  EXPECT_EQ(star.parts[1], VertexSet::of(4, {1, 2, 3}));
  EXPECT_EQ(classify_join_of_regulars(oracle::paw()).kind, JoinClass::neither);
  EXPECT_EQ(classify_join_of_regulars(complete_bipartite_graph(2, 3)).kind,
            JoinClass::nonregular_join_of_regulars);
  EXPECT_EQ(classify_join_of_regulars(empty_graph(3)).kind, JoinClass::regular);
  // Disconnected and not regular.
  EXPECT_EQ(classify_join_of_regulars(build_graph(3, {{0, 1}})).kind, JoinClass::neither);
}

// A join of regular graphs, built explicitly, is always recognised, and its
// finest parts refine the construction.
TEST(JoinClass, RecognisesConstructedJoins) {
  const std::vector<Graph> regs = {complete_graph(1), empty_graph(2), complete_graph(3),
                                   cycle_graph(4), cycle_graph(5), empty_graph(3)};
  for (const auto& a : regs)
    for (const auto& b : regs) {
      const auto j = join_graphs({a, b});
      const auto c = classify_join_of_regulars(j);
      EXPECT_NE(c.kind, JoinClass::neither);
      EXPECT_GE(c.parts.size(), 2u);
    }
}
