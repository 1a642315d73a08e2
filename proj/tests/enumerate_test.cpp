#include <gtest/gtest.h>

#include <set>

#include "dbal/enumerate.hpp"
#include "dbal/graph6.hpp"
#include "oracle.hpp"

using namespace dbal;

static std::size_t count_stream(GraphStream s) {
  std::size_t c = 0;
  while (s.next()) ++c;
  return c;
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(count_stream(enumerate_connected(1)), 1u);
  EXPECT_EQ(count_stream(enumerate_connected(3)), 4u);
  EXPECT_EQ(count_stream(enumerate_connected(4)), 38u);
}

TEST(Enumerate, MatchesInclusionExclusion) {
  for (std::size_t n = 1; n <= 6; ++n)
    EXPECT_EQ(count_stream(enumerate_connected(n)), oracle::connected_labeled_count(n)) << n;
  EXPECT_EQ(oracle::connected_labeled_count(7), 1866256u);
}

TEST(Enumerate, EveryGraphConnectedAndDistinct) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    auto s = enumerate_connected(n);
    while (auto g = s.next()) {
      EXPECT_TRUE(oracle::connected(oracle::floyd_warshall(*g)));
      EXPECT_TRUE(seen.insert(serialize_graph6(*g)).second);
    }
  }
}

TEST(Enumerate, AllGraphs) {
  EXPECT_EQ(count_stream(enumerate_all(3)), 8u);
  EXPECT_EQ(collect_graphs(1, 3, false).size(), 1u + 2u + 8u);
}

TEST(Enumerate, OrderGuard) {
  EXPECT_THROW(enumerate_connected(0), GraphError);
  EXPECT_THROW(enumerate_connected(8), GraphError);
}

TEST(Enumerate, MaskLayoutFollowsGraph6Columns) {
  // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
  EXPECT_EQ(graph_from_edge_mask(3, 0b001), build_graph(3, {{0, 1}}));
  EXPECT_EQ(graph_from_edge_mask(3, 0b010), build_graph(3, {{0, 2}}));
  EXPECT_EQ(graph_from_edge_mask(3, 0b100), build_graph(3, {{1, 2}}));
  EXPECT_TRUE(edge_mask_connected(3, 0b011));
  EXPECT_FALSE(edge_mask_connected(3, 0b100));
  EXPECT_TRUE(edge_mask_connected(1, 0));
}
