#include <gtest/gtest.h>

#include <set>

#include "broadcast/algorithms.hpp"
#include "broadcast/families.hpp"
#include "broadcast/isomorphism.hpp"
#include "broadcast/solver.hpp"
#include "broadcast/strategies.hpp"
#include "oracle.hpp"

using namespace broadcast;

namespace {

void expect_ranks_match(const AttractorTable& table, const std::map<oracle::State, int>& want) {
  ASSERT_EQ(table.state_count(), want.size());
  for (const auto& [s, r] : want) {
    GameState gs(s.first, s.second);
    auto got = table.rank(gs);
    EXPECT_EQ(got.value_or(-1), r) << to_string(gs) << " on " << table.graph().vertex_count() << " vertices";
  }
}

}  // namespace

TEST(StateIndexer, IsABijection) {
  for (auto [n, k, mk] : std::vector<std::tuple<int, int, int>>{{5, 3, 1}, {4, 4, 0}, {6, 2, 1}, {3, 5, 2}}) {
    StateIndexer idx(n, k, mk);
    auto all = oracle::universe(n, k, mk);
    ASSERT_EQ(idx.size(), all.size());
    std::set<std::size_t> seen;
    for (const auto& s : all) {
      GameState gs(s.first, s.second);
      std::size_t i = idx.index(gs);
      ASSERT_LT(i, idx.size());
      EXPECT_TRUE(seen.insert(i).second);
      EXPECT_EQ(idx.state(i), gs);
    }
  }
}

TEST(Attractor, RanksMatchValueIteration) {
  std::vector<std::pair<Graph, int>> cases{
      {cycle_graph(4), 2}, {cycle_graph(5), 2}, {cycle_graph(5), 3}, {complete_graph(4), 2},
      {complete_graph(4), 3}, {path_graph(4), 3}, {theta_graph({2, 3}), 2}, {star_graph(3), 3},
      {Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}), 2}};
  for (const auto& [g, k] : cases) {
    auto trees = oracle::spanning_trees(g);
    auto want = oracle::ranks(g.vertex_count(), k, 1, false, trees);
    expect_ranks_match(agents_attractor(g, k), want);
  }
}

TEST(Attractor, FirstSpreadAndConfigRanks) {
  Graph g = cycle_graph(5);
  auto trees = oracle::spanning_trees(g);
  expect_ranks_match(config_attractor(g, 2, 1, Goal::FirstSpread), oracle::ranks(5, 3, 1, true, trees));
  expect_ranks_match(config_attractor(g, 1, 2, Goal::AllKnowledgeable), oracle::ranks(5, 3, 2, false, trees));
}

TEST(Attractor, AllSubgraphModeMatchesOracle) {
  Graph g = theta_graph({2, 2, 2});
  SolverOptions o;
  o.all_connected_subgraphs = true;
  auto want = oracle::ranks(g.vertex_count(), 2, 1, false, oracle::connected_spanning(g));
  expect_ranks_match(agents_attractor(g, 2, o), want);
}

TEST(Attractor, ThreadCountDoesNotChangeResult) {
  Graph g = theta_graph({3, 3, 3});
  SolverOptions one;
  SolverOptions four;
  four.threads = 4;
  auto a = agents_attractor(g, 3, one);
  auto b = agents_attractor(g, 3, four);
  EXPECT_EQ(a.ranks(), b.ranks());
  EXPECT_EQ(to_json(classify_with(a, PlacementRule::AdversaryPlaces)).dump(),
            to_json(classify_with(b, PlacementRule::AdversaryPlaces)).dump());
}

TEST(Attractor, Budgets) {
  SolverOptions tiny;
  tiny.max_states = 100;
  EXPECT_THROW(agents_attractor(complete_graph(6), 3, tiny), BudgetExceeded);
  SolverOptions few_trees;
  few_trees.max_trees = 10;
  EXPECT_THROW(agents_attractor(complete_graph(5), 2, few_trees), BudgetExceeded);
}

TEST(Classify, PlacementRules) {
  // On C_5 with two agents Adversary wins from every placement.
  auto adv = classify(cycle_graph(5), 2, PlacementRule::AdversaryPlaces);
  EXPECT_EQ(adv.winner, Winner::Adversary);
  ASSERT_TRUE(adv.witness_placement.has_value());
  auto table = agents_attractor(cycle_graph(5), 2);
  EXPECT_FALSE(table.contains(*adv.witness_placement));
  EXPECT_EQ(classify(cycle_graph(5), 2, PlacementRule::AgentsPlace).winner, Winner::Adversary);

  // A tree: Agents everywhere, time is the worst placement.
  auto p = classify(path_graph(6), 2);
  EXPECT_EQ(p.winner, Winner::Agents);
  EXPECT_EQ(p.optimal_time, 3);
  auto best = classify(path_graph(6), 2, PlacementRule::AgentsPlace);
  EXPECT_EQ(best.optimal_time, 1);
}

TEST(Classify, JsonShape) {
  auto j = to_json(classify(cycle_graph(5), 2));
  EXPECT_EQ(j["winner"], "Adversary");
  EXPECT_TRUE(j["optimal_time"].is_null());
  EXPECT_EQ(j["placement_rule"], "AdversaryPlaces");
}

TEST(ClassifyConfig, PathTimes) {
  auto t = classify_config(path_graph(6), 1, 1);
  EXPECT_EQ(t.win_time, 3);
  EXPECT_EQ(t.first_spread_time, 3);
  auto u = classify_config(path_graph(6), 3, 1);
  EXPECT_EQ(u.first_spread_time, 2);
  EXPECT_EQ(u.win_time, 3);
}

TEST(TreeReduction, HoldsOnSmallGraphs) {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : connected_graph_classes(n)) EXPECT_TRUE(tree_reduction_equivalence_check(g, 2)) << n;
  EXPECT_TRUE(tree_reduction_equivalence_check(cycle_graph(5), 3));
  EXPECT_THROW(tree_reduction_equivalence_check(complete_graph(6), 2), BudgetExceeded);
}

TEST(OptimalPlay, RealizesRank) {
  Graph g = theta_graph({2, 3});
  auto table = std::make_shared<const AttractorTable>(agents_attractor(g, 3));
  for (const GameState& s0 : initial_placements(g, 3)) {
    auto r = table->rank(s0);
    OptimalAdversary adv(table);
    OptimalAgents ag(table);
    PlayResult res = play(g, s0, adv, ag, 50);
    if (r) {
      ASSERT_TRUE(std::holds_alternative<outcome::AgentsWinAt>(res.outcome));
      EXPECT_EQ(std::get<outcome::AgentsWinAt>(res.outcome).round, *r);
    } else {
      EXPECT_FALSE(std::holds_alternative<outcome::AgentsWinAt>(res.outcome));
    }
  }
}

TEST(Refute, FindsWinAgainstWeakAdversary) {
  // A tree leaves Adversary a single choice, so even optimal play loses.
  Graph p = path_graph(4);
  auto table = std::make_shared<const AttractorTable>(agents_attractor(p, 2));
  OptimalAdversary adv(table);
  auto ce = refute_adversary_strategy(p, 2, adv);
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(static_cast<int>(ce->line.size()), table->rank(ce->placement).value());
  EXPECT_TRUE(is_agents_win(ce->line.back().after));
  auto all = refute_adversary_strategy(p, 2, adv, PlacementRule::AgentsPlace);
  ASSERT_TRUE(all.has_value());
}

TEST(Refute, CycleStrategyHoldsOnLongCycles) {
  for (int m = 5; m <= 9; ++m) {
    CycleAdversary adv(cycle_graph(m));
    EXPECT_FALSE(refute_adversary_strategy(cycle_graph(m), 2, adv).has_value()) << m;
    EXPECT_FALSE(refute_adversary_strategy(cycle_graph(m), 2, adv, PlacementRule::AgentsPlace).has_value()) << m;
  }
}

TEST(EvaluateAgents, RendezvousOnTrees) {
  Graph p = path_graph(5);
  RendezvousAgents meet(2);
  auto e = evaluate_agents_strategy(p, GameState({0}, {4}), meet);
  EXPECT_EQ(e.worst_case_time, 2);

  // On a cycle Adversary can cut between them forever.
  Graph c = cycle_graph(6);
  RendezvousAgents meet0(0);
  auto stall = evaluate_agents_strategy(c, GameState({3}, {1}), meet0);
  EXPECT_FALSE(stall.worst_case_time.has_value());
  EXPECT_GE(stall.cycle_start, 0);
  EXPECT_FALSE(stall.counterline.empty());
}

TEST(Invariants, SingleAgentWinsAtOnce) {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), grid_graph(2, 3)}) {
    auto c = classify(g, 1);
    EXPECT_EQ(c.winner, Winner::Agents);
    EXPECT_EQ(c.optimal_time, 0);
  }
}

TEST(Invariants, MoreAgentsNeverHurt) {
  std::vector<Graph> graphs{cycle_graph(5), cycle_graph(6), complete_graph(5), theta_graph({3, 3}),
                            theta_graph({3, 3, 3}), path_graph(5), grid_graph(2, 3)};
  for (const Graph& g : graphs) {
    for (int k = 2; k < std::min(4, g.vertex_count()); ++k) {
      if (classify(g, k).winner == Winner::Agents) EXPECT_EQ(classify(g, k + 1).winner, Winner::Agents);
    }
  }
}

TEST(Invariants, RanksInvariantUnderRotation) {
  Graph c = cycle_graph(6);
  auto table = agents_attractor(c, 3);
  auto rotate = [](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back((v + 1) % 6);
    return out;
  };
  for (std::size_t i = 0; i < table.state_count(); ++i) {
    GameState s = table.indexer().state(i);
    GameState r(rotate(s.knowledgeable), rotate(s.ignorant));
    EXPECT_EQ(table.rank(s), table.rank(r)) << to_string(s);
  }
}
