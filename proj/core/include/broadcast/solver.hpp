#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "broadcast/algorithms.hpp"
#include "broadcast/game.hpp"
#include "broadcast/graph.hpp"
#include "broadcast/strategy.hpp"

namespace broadcast {

enum class Goal { AllKnowledgeable, FirstSpread };
enum class Winner { Agents, Adversary };
enum class PlacementRule { AdversaryPlaces, AgentsPlace };

const char* to_string(Winner w);
const char* to_string(PlacementRule r);

struct SolverOptions {
  std::size_t max_states = 2'000'000;
  std::size_t max_trees = 50'000;
  unsigned threads = 1;
  /// Quantify Adversary over every connected spanning subgraph instead of
  /// spanning trees only. Exponential in |E|; used to validate the reduction.
  bool all_connected_subgraphs = false;
};

/// Perfect index of every state with `agents` agents on n vertices and at
/// least `min_knowledgeable` of them knowledgeable.
class StateIndexer {
 public:
  StateIndexer(int vertex_count, int agents, int min_knowledgeable);

  std::size_t size() const { return size_; }
  int vertex_count() const { return n_; }
  int agents() const { return agents_; }
  int min_knowledgeable() const { return min_k_; }

  std::size_t index(const GameState& s) const;
  /// Slots are sorted knowledgeable positions followed by sorted ignorant ones.
  std::size_t index_slots(const std::uint8_t* slots, int knowledgeable) const;
  GameState state(std::size_t idx) const;
  bool in_universe(const GameState& s) const;

 private:
  std::uint64_t multisets(int size) const;
  std::uint64_t rank_multiset(const std::uint8_t* sorted, int size) const;
  void unrank_multiset(std::uint64_t r, int size, std::vector<Vertex>& out) const;
  std::uint64_t binom(int a, int b) const;

  int n_;
  int agents_;
  int min_k_;
  int binom_rows_;
  std::vector<std::uint64_t> binom_;
  std::vector<std::size_t> offset_;  // by knowledgeable count - min_k_
  std::size_t size_ = 0;
};

/// Least fixed point of the Agents reachability game: rank r means Agents
/// can force the goal within exactly r more rounds against best play.
class AttractorTable {
 public:
  static constexpr int kUnreached = -1;

  AttractorTable(const Graph& g, int agents, int min_knowledgeable, Goal goal,
                 const SolverOptions& options);

  const Graph& graph() const { return graph_; }
  int agents() const { return indexer_.agents(); }
  int min_knowledgeable() const { return indexer_.min_knowledgeable(); }
  Goal goal() const { return goal_; }
  std::size_t state_count() const { return indexer_.size(); }
  int iterations() const { return iterations_; }
  const StateIndexer& indexer() const { return indexer_; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<SpanningChoice>& choices() const { return choices_; }

  bool is_goal(const GameState& s) const;
  std::optional<int> rank(const GameState& s) const;
  bool contains(const GameState& s) const { return rank(s).has_value(); }

  /// Lowest rank reachable under `choice` (nullopt when every successor is
  /// outside the attractor).
  std::optional<int> choice_value(const GameState& s, const SpanningChoice& choice) const;
  /// Index into choices() of a choice that delays Agents the most.
  std::size_t worst_choice(const GameState& s) const;
  /// A move into the lowest-ranked successor (first found on ties).
  MoveVector best_move(const GameState& s, const SpanningChoice& choice) const;

 private:
  void solve(const SolverOptions& options);

  Graph graph_;
  StateIndexer indexer_;
  Goal goal_;
  std::vector<SpanningChoice> choices_;
  std::vector<int> ranks_;
  int iterations_ = 0;
};

AttractorTable agents_attractor(const Graph& g, int k, const SolverOptions& options = {});
/// x ignorant and y knowledgeable agents; states never drop below y knowledgeable.
AttractorTable config_attractor(const Graph& g, int x, int y, Goal goal,
                                const SolverOptions& options = {});

struct Classification {
  Winner winner = Winner::Adversary;
  std::optional<int> optimal_time;
  std::optional<GameState> witness_placement;
  PlacementRule rule = PlacementRule::AdversaryPlaces;
  std::size_t state_count = 0;
  int iterations = 0;
};

Classification classify(const Graph& g, int k, PlacementRule rule = PlacementRule::AdversaryPlaces,
                        const SolverOptions& options = {});
Classification classify_with(const AttractorTable& table, PlacementRule rule);
nlohmann::json to_json(const Classification& c);

struct ConfigTimes {
  int ignorant = 0;
  int knowledgeable = 0;
  /// Worst case over Adversary placements; nullopt means Adversary prevents that goal.
  std::optional<int> first_spread_time;
  std::optional<int> win_time;
  std::size_t state_count = 0;
};

ConfigTimes classify_config(const Graph& g, int x, int y, const SolverOptions& options = {});
nlohmann::json to_json(const ConfigTimes& t);

/// Compares the spanning-tree attractor against the one quantified over all
/// connected spanning subgraphs. Requires |E| <= 12.
bool tree_reduction_equivalence_check(const Graph& g, int k, const SolverOptions& options = {});

/// Adversary that plays the table's delaying choice; places agents on the
/// table's witness (or slowest) placement.
class OptimalAdversary : public AdversaryStrategy {
 public:
  explicit OptimalAdversary(std::shared_ptr<const AttractorTable> table);
  std::string name() const override { return "optimal"; }
  const Graph& graph() const override { return table_->graph(); }
  std::optional<GameState> designated_placement(int k) const override;
  SpanningChoice choose(const GameState& s, Phase phase) override;

 private:
  std::shared_ptr<const AttractorTable> table_;
};

class OptimalAgents : public AgentsStrategy {
 public:
  explicit OptimalAgents(std::shared_ptr<const AttractorTable> table);
  std::string name() const override { return "optimal"; }
  MoveVector move(const GameState& s, const SpanningChoice& choice, Phase phase) override;

 private:
  std::shared_ptr<const AttractorTable> table_;
};

struct LineStep {
  std::vector<Edge> choice;
  GameState after;
};

struct Counterexample {
  GameState placement;
  std::vector<LineStep> line;
};

nlohmann::json to_json(const Counterexample& c);

/// Searches for an Agents win against the fixed Adversary strategy. Under
/// AdversaryPlaces play starts from the strategy's designated placement;
/// under AgentsPlace from every initial placement.
std::optional<Counterexample> refute_adversary_strategy(
    const Graph& g, int k, AdversaryStrategy& adv,
    PlacementRule rule = PlacementRule::AdversaryPlaces, std::size_t max_nodes = 2'000'000);

struct AgentsEvaluation {
  /// Longest win time over every sequence of spanning trees.
  std::optional<int> worst_case_time;
  /// When Adversary can stall forever: the tree sequence from s0 into a
  /// repeated (state, phase) node, which recurs at index cycle_start.
  std::vector<LineStep> counterline;
  int cycle_start = -1;
};

AgentsEvaluation evaluate_agents_strategy(const Graph& g, const GameState& s0, AgentsStrategy& ag,
                                          const SolverOptions& options = {});

}  // namespace broadcast
