#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "broadcast/bounds.hpp"
#include "broadcast/families.hpp"
#include "broadcast/isomorphism.hpp"
#include "oracle.hpp"

using namespace broadcast;

namespace {

// Max over v and y-sets avoiding v of the nearest-member distance, by
// enumerating every y-set.
int brute_set_diameter(const Graph& g, int y) {
  auto d = oracle::floyd(g);
  const int n = g.vertex_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != y) continue;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) continue;
      int nearest = 1 << 20;
      for (int w = 0; w < n; ++w)
        if (mask >> w & 1U) nearest = std::min(nearest, d[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]);
      best = std::max(best, nearest);
    }
  }
  return best;
}

}  // namespace

TEST(SetDiameter, MatchesSubsetEnumeration) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graph_classes(n))
      for (int y = 1; y < n; ++y) EXPECT_EQ(y_set_diameter(g, y), brute_set_diameter(g, y));
  EXPECT_EQ(y_set_diameter(path_graph(6), 2), 4);
  EXPECT_THROW(y_set_diameter(path_graph(3), 3), GraphError);
}

TEST(Separation, AndLowerBound) {
  Graph p = path_graph(7);
  GameState s({0, 6}, {3, 1});
  EXPECT_EQ(initial_separation(p, s), 3);
  EXPECT_EQ(time_lower_bound(p, s).rounds, 2);
  EXPECT_EQ(time_lower_bound(p, s).kind, BoundKind::LowerBound);
  EXPECT_THROW(initial_separation(p, GameState({0}, {})), GameError);
}

TEST(PathFormulas, Values) {
  EXPECT_EQ(path_time_bounds(8, 1, 1).all_knowledgeable, 4);
  EXPECT_EQ(path_time_bounds(8, 1, 1).first_spread, 3);
  EXPECT_EQ(path_time_bounds(7, 2, 1).first_spread, 2);
  EXPECT_THROW(path_time_bounds(3, 2, 2), GameError);
}

TEST(TreeBound, HalfDiameter) {
  EXPECT_EQ(tree_two_agent_bound(path_graph(6)), 3);
  EXPECT_EQ(tree_two_agent_bound(star_graph(5)), 1);
  EXPECT_THROW(tree_two_agent_bound(cycle_graph(4)), GraphError);
}

TEST(PlacementForBound, RealizesSetDiameter) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      for (int y = 1; y <= 2 && y < n; ++y) {
        for (int x = 1; x + y <= n && x <= 2; ++x) {
          GameState s = placement_for_bound(g, x, y);
          EXPECT_EQ(static_cast<int>(s.knowledgeable.size()), y);
          EXPECT_EQ(static_cast<int>(s.ignorant.size()), x);
          EXPECT_EQ(std::popcount(s.occupied()), x + y);
          EXPECT_GE(initial_separation(g, s), y_set_diameter(g, y));
        }
      }
    }
  }
}
