#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "broadcast/graph.hpp"

namespace broadcast {

class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Agent positions split by knowledge; both multisets kept sorted.
struct GameState {
  std::vector<Vertex> knowledgeable;
  std::vector<Vertex> ignorant;

  GameState() = default;
  GameState(std::vector<Vertex> k, std::vector<Vertex> i);

  int agent_count() const { return static_cast<int>(knowledgeable.size() + ignorant.size()); }
  /// Knowledgeable slots first, then ignorant, matching MoveVector order.
  std::vector<Vertex> slots() const;
  VertexMask occupied() const;

  auto operator<=>(const GameState&) const = default;
};

struct GameStateHash {
  std::size_t operator()(const GameState& s) const;
};

std::string to_string(const GameState& s);
nlohmann::json to_json(const GameState& s);
GameState state_from_json(const nlohmann::json& j);

/// A connected spanning subgraph of a base graph.
class SpanningChoice {
 public:
  /// Validates edges against `base`; throws GameError unless connected and spanning.
  SpanningChoice(const Graph& base, std::vector<Edge> edges);
  /// The whole base graph (for bases that are trees this is the only choice).
  static SpanningChoice whole(const Graph& base);
  /// Trusted construction for subgraphs already known to be valid.
  static SpanningChoice unchecked(Graph subgraph);

  const Graph& subgraph() const { return sub_; }
  const std::vector<Edge>& edges() const { return sub_.edges(); }
  VertexMask closed_neighborhood(Vertex v) const { return sub_.neighbors(v) | bit(v); }

  bool operator==(const SpanningChoice& other) const { return sub_ == other.sub_; }

 private:
  explicit SpanningChoice(Graph sub) : sub_(std::move(sub)) {}
  Graph sub_;
};

/// Destination per agent slot, in GameState::slots() order.
using MoveVector = std::vector<Vertex>;

bool is_agents_win(const GameState& s);

/// One knowledgeable and k-1 ignorant agents on k distinct vertices.
std::vector<GameState> initial_placements(const Graph& g, int k);
/// y knowledgeable and x ignorant agents on x+y distinct vertices.
std::vector<GameState> config_placements(const Graph& g, int x, int y);

/// Moves agents, then informs every ignorant agent that lands on a vertex
/// holding an agent that was knowledgeable when the round began.
GameState apply_moves(const Graph& g, const GameState& s, const SpanningChoice& choice,
                      const MoveVector& mv);
/// Same transfer rule without legality checks.
GameState resolve_moves(const GameState& s, const MoveVector& mv);

/// Every distinct successor reachable in one round under `choice`.
std::vector<GameState> agent_move_options(const Graph& g, const GameState& s,
                                          const SpanningChoice& choice);

/// Enumerates move vectors up to permutation of co-located agents of the
/// same knowledge class. The visitor returns false to stop.
void for_each_move(const GameState& s, const SpanningChoice& choice,
                   const std::function<bool(const MoveVector&)>& visit);

class AdversaryStrategy;
class AgentsStrategy;

namespace outcome {
struct AgentsWinAt { int round; };
struct CycleDetected { int first_repeat_round; int period; };
struct RoundCapReached { int cap; };
}  // namespace outcome

using PlayOutcome = std::variant<outcome::AgentsWinAt, outcome::CycleDetected, outcome::RoundCapReached>;

struct RoundRecord {
  int round = 0;
  std::vector<Edge> subgraph_edges;
  GameState before;
  GameState after;
};

struct PlayResult {
  PlayOutcome outcome;
  std::vector<RoundRecord> trace;
};

/// Runs the two strategies against each other from s0. Repetition is keyed
/// on (state, adversary phase, agents phase).
PlayResult play(const Graph& g, const GameState& s0, AdversaryStrategy& adv, AgentsStrategy& ag,
                int cap);

nlohmann::json to_json(const PlayOutcome& outcome);
nlohmann::json to_json(const RoundRecord& record);
nlohmann::json trace_to_json(const std::vector<RoundRecord>& trace);
nlohmann::json edges_to_json(const std::vector<Edge>& edges);

}  // namespace broadcast
