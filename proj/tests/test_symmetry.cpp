#include <gtest/gtest.h>

#include <set>

#include "broadcast/algorithms.hpp"
#include "broadcast/families.hpp"
#include "broadcast/isomorphism.hpp"
#include "broadcast/solver.hpp"
#include "broadcast/strategies.hpp"
#include "broadcast/symmetry.hpp"

using namespace broadcast;

TEST(OneStep, CountIsProductOfClosedNeighborhoods) {
  Graph t = path_graph(5);
  auto fs = one_step_functions({0, 2, 4}, t);
  EXPECT_EQ(fs.size(), 2U * 3U * 2U);
  std::set<std::vector<Vertex>> images;
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      EXPECT_TRUE(f.image[i] == f.domain[i] || t.has_edge(f.domain[i], f.image[i]));
    }
    images.insert(f.image);
  }
  EXPECT_EQ(images.size(), fs.size());
  OneStepFunction clash{{0, 2}, {1, 1}};
  EXPECT_FALSE(clash.injective());
}

TEST(Extension, MapIsAnEmbeddingExtendingT) {
  Graph g = complete_graph(5);
  Graph tree = star_graph(4);
  for (const auto& t : one_step_functions({1, 3}, tree)) {
    auto phi = extends_to_tree_isomorphism(tree, t, g);
    if (!t.injective()) {
      EXPECT_FALSE(phi.has_value());
      continue;
    }
    ASSERT_TRUE(phi.has_value());
    std::set<Vertex> used(phi->begin(), phi->end());
    EXPECT_EQ(used.size(), 5U);
    for (std::size_t i = 0; i < t.domain.size(); ++i) EXPECT_EQ((*phi)[static_cast<std::size_t>(t.domain[i])], t.image[i]);
    for (const Edge& e : tree.edges()) {
      EXPECT_TRUE(g.has_edge((*phi)[static_cast<std::size_t>(e.u)], (*phi)[static_cast<std::size_t>(e.v)]));
    }
  }
  // The path has no room to fold onto itself.
  Graph p = path_graph(4);
  OneStepFunction squeeze{{0, 3}, {1, 2}};
  EXPECT_FALSE(extends_to_tree_isomorphism(p, squeeze, p).has_value());
}

TEST(Sts, CliqueWitnessValidatesAndRoundTrips) {
  auto w = has_k_sts(complete_graph(5), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->entries.size(), 10U);
  std::string why;
  EXPECT_TRUE(validate_witness(*w, &why)) << why;
  StsWitness back = witness_from_json(to_json(*w));
  EXPECT_TRUE(validate_witness(back, &why)) << why;
  EXPECT_EQ(to_json(back).dump(), to_json(*w).dump());
  ASSERT_NE(w->find({0, 3}), nullptr);
  EXPECT_EQ(w->find({0, 0}), nullptr);
}

TEST(Sts, TamperedWitnessIsRejected) {
  auto w = has_k_sts(complete_graph(5), 2);
  ASSERT_TRUE(w.has_value());
  StsWitness bad = *w;
  auto& ext = bad.entries[0].extensions.begin()->second;
  std::swap(ext[0], ext[1]);
  std::string why;
  EXPECT_FALSE(validate_witness(bad, &why));
  EXPECT_FALSE(why.empty());
}

TEST(Sts, NoneOnPathsAndTrees) {
  for (int n = 2; n <= 6; ++n) EXPECT_FALSE(has_k_sts(path_graph(n), 2).has_value()) << n;
  EXPECT_FALSE(has_k_sts(star_graph(4), 2).has_value());
}

TEST(Sts, WitnessImpliesAdversaryOnSmallGraphs) {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      auto w = has_k_sts(g, 2);
      if (!w) continue;
      EXPECT_EQ(classify(g, 2, PlacementRule::AgentsPlace).winner, Winner::Adversary);
      auto shared = std::make_shared<const StsWitness>(*w);
      StsAdversary adv(shared);
      EXPECT_FALSE(refute_adversary_strategy(g, 2, adv, PlacementRule::AgentsPlace).has_value());
    }
  }
}

TEST(Sts, Budget) { EXPECT_THROW(has_k_sts(complete_graph(7), 2, 1000), BudgetExceeded); }
