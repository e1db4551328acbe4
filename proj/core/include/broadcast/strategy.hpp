#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "broadcast/game.hpp"
#include "broadcast/graph.hpp"

namespace broadcast {

/// Strategy-internal memory. Strategies whose memory is richer than a number
/// intern it in their own tables and hand out indices, so a phase value is
/// only meaningful to the instance that produced it.
using Phase = std::uint64_t;

class AdversaryStrategy {
 public:
  virtual ~AdversaryStrategy() = default;

  virtual std::string name() const = 0;
  virtual const Graph& graph() const = 0;

  /// Where this Adversary puts the agents when it gets to choose.
  virtual std::optional<GameState> designated_placement(int /*k*/) const { return std::nullopt; }

  virtual Phase initial_phase(const GameState& /*s0*/) { return 0; }
  virtual SpanningChoice choose(const GameState& s, Phase phase) = 0;
  virtual Phase advance(Phase phase, const GameState& /*before*/, const SpanningChoice& /*played*/,
                        const GameState& /*after*/) {
    return phase;
  }
};

class AgentsStrategy {
 public:
  virtual ~AgentsStrategy() = default;

  virtual std::string name() const = 0;

  virtual Phase initial_phase(const GameState& /*s0*/) { return 0; }
  virtual MoveVector move(const GameState& s, const SpanningChoice& choice, Phase phase) = 0;
  virtual Phase advance(Phase phase, const GameState& /*before*/, const SpanningChoice& /*played*/,
                        const GameState& /*after*/) {
    return phase;
  }
};

/// Throws GameError unless every destination is legal under `choice`.
void check_move(const GameState& s, const SpanningChoice& choice, const MoveVector& mv);
/// Throws GameError unless `choice` is a connected spanning subgraph of g.
void check_choice(const Graph& g, const SpanningChoice& choice);

}  // namespace broadcast
