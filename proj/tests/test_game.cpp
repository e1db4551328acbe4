#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "broadcast/algorithms.hpp"
#include "broadcast/families.hpp"
#include "broadcast/game.hpp"
#include "broadcast/strategies.hpp"
#include "broadcast/strategy.hpp"
#include "oracle.hpp"

using namespace broadcast;

TEST(GameState, SortsAndOrdersSlots) {
  GameState s({3, 1}, {2, 0, 2});
  EXPECT_EQ(s.knowledgeable, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(s.ignorant, (std::vector<Vertex>{0, 2, 2}));
  EXPECT_EQ(s.slots(), (std::vector<Vertex>{1, 3, 0, 2, 2}));
  EXPECT_EQ(s.agent_count(), 5);
  EXPECT_EQ(s.occupied(), bit(0) | bit(1) | bit(2) | bit(3));
  EXPECT_EQ(state_from_json(to_json(s)), s);
}

TEST(SpanningChoice, Validation) {
  Graph g = cycle_graph(4);
  EXPECT_NO_THROW(SpanningChoice(g, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_THROW(SpanningChoice(g, {{0, 1}, {2, 3}}), GameError);
  EXPECT_THROW(SpanningChoice(g, {{0, 2}, {1, 2}, {2, 3}}), GameError);
  SpanningChoice c(g, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(c.closed_neighborhood(0), bit(0) | bit(1));
}

TEST(Moves, TransferNeedsCoLocation) {
  Graph g = path_graph(3);
  SpanningChoice whole = SpanningChoice::whole(g);
  GameState s({0}, {1});
  // Swap across an edge: no meeting.
  EXPECT_EQ(apply_moves(g, s, whole, {1, 0}), GameState({1}, {0}));
  // Meeting on a vertex.
  EXPECT_EQ(apply_moves(g, s, whole, {1, 1}), GameState({1, 1}, {}));
  // Newly informed agents do not relay in the same round.
  GameState chain({0}, {1, 2});
  GameState after = apply_moves(g, chain, whole, {1, 1, 2});
  EXPECT_EQ(after, GameState({1, 1}, {2}));
  EXPECT_THROW(apply_moves(g, s, whole, {2, 1}), GameError);
  EXPECT_THROW(apply_moves(g, s, whole, {0}), GameError);
}

TEST(Moves, SuccessorsMatchNaiveEnumeration) {
  std::vector<Graph> graphs{cycle_graph(4), complete_graph(4), theta_graph({2, 3}), path_graph(4)};
  for (const Graph& g : graphs) {
    auto trees = spanning_trees(g);
    for (const auto& s : oracle::universe(g.vertex_count(), 3, 1)) {
      GameState gs(s.first, s.second);
      for (const Graph& t : trees) {
        SpanningChoice c = SpanningChoice::unchecked(t);
        std::set<oracle::State> got;
        for (const GameState& next : agent_move_options(g, gs, c)) got.insert({next.knowledgeable, next.ignorant});
        EXPECT_EQ(got, oracle::successors(g.vertex_count(), s, t.edges()));

        std::set<oracle::State> via_moves;
        for_each_move(gs, c, [&](const MoveVector& mv) {
          GameState next = resolve_moves(gs, mv);
          via_moves.insert({next.knowledgeable, next.ignorant});
          return true;
        });
        EXPECT_EQ(via_moves, got);
      }
    }
  }
}

TEST(Placements, CountsAndDistinctness) {
  Graph g = cycle_graph(5);
  auto p = initial_placements(g, 3);
  EXPECT_EQ(p.size(), 5U * 6U);
  for (const auto& s : p) {
    EXPECT_EQ(s.knowledgeable.size(), 1U);
    EXPECT_EQ(std::popcount(s.occupied()), 3);
  }
  EXPECT_EQ(config_placements(g, 2, 2).size(), 10U * 3U);
  EXPECT_THROW(initial_placements(g, 6), GameError);
}

namespace {

class HoldAgents : public AgentsStrategy {
 public:
  std::string name() const override { return "hold"; }
  MoveVector move(const GameState& s, const SpanningChoice&, Phase) override { return s.slots(); }
};

class FixedAdversary : public AdversaryStrategy {
 public:
  explicit FixedAdversary(Graph g) : g_(std::move(g)) {}
  std::string name() const override { return "fixed"; }
  const Graph& graph() const override { return g_; }
  SpanningChoice choose(const GameState&, Phase) override { return SpanningChoice::whole(g_); }

 private:
  Graph g_;
};

}  // namespace

TEST(Play, OutcomesAndTrace) {
  Graph p = path_graph(5);
  FixedAdversary adv(p);
  RendezvousAgents meet(2);
  PlayResult r = play(p, GameState({0}, {4}), adv, meet, 10);
  ASSERT_TRUE(std::holds_alternative<outcome::AgentsWinAt>(r.outcome));
  EXPECT_EQ(std::get<outcome::AgentsWinAt>(r.outcome).round, 2);
  ASSERT_EQ(r.trace.size(), 2U);
  EXPECT_EQ(r.trace[0].round, 1);
  EXPECT_EQ(r.trace[1].after, GameState({2, 2}, {}));

  HoldAgents hold;
  PlayResult stuck = play(p, GameState({0}, {4}), adv, hold, 10);
  ASSERT_TRUE(std::holds_alternative<outcome::CycleDetected>(stuck.outcome));
  EXPECT_EQ(std::get<outcome::CycleDetected>(stuck.outcome).period, 1);

  PlayResult already = play(p, GameState({0, 1}, {}), adv, hold, 10);
  EXPECT_EQ(std::get<outcome::AgentsWinAt>(already.outcome).round, 0);
  EXPECT_TRUE(already.trace.empty());

  auto j = trace_to_json(r.trace);
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[1]["knowledgeable_count"], 2);
  EXPECT_EQ(to_json(r.outcome)["outcome"], "AgentsWinAt");
}
