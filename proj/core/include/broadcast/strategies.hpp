#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "broadcast/algorithms.hpp"
#include "broadcast/constructions.hpp"
#include "broadcast/game.hpp"
#include "broadcast/strategy.hpp"
#include "broadcast/symmetry.hpp"

namespace broadcast {

/// Every agent steps toward `target` along a shortest path of the current
/// choice (on a tree: the unique path).
class RendezvousAgents : public AgentsStrategy {
 public:
  explicit RendezvousAgents(Vertex target) : target_(target) {}
  std::string name() const override { return "rendezvous:" + std::to_string(target_); }
  MoveVector move(const GameState& s, const SpanningChoice& choice, Phase phase) override;

 private:
  Vertex target_;
};

/// On a cycle: drop the edge at the knowledgeable agent that starts the
/// shortest path toward the nearest ignorant agent.
class CycleAdversary : public AdversaryStrategy {
 public:
  /// With a seed, ties between two shortest sides are broken by a hash of
  /// (seed, state) instead of by lowest neighbor.
  explicit CycleAdversary(Graph cycle, std::optional<std::uint64_t> seed = std::nullopt);
  std::string name() const override { return "cycle"; }
  const Graph& graph() const override { return g_; }
  /// k=2: knowledgeable at vertex 0, ignorant floor(m/2) steps away.
  std::optional<GameState> designated_placement(int k) const override;
  SpanningChoice choose(const GameState& s, Phase phase) override;

  /// The edge the strategy removes in state s.
  Edge removed_edge(const GameState& s) const;

 private:
  Graph g_;
  DistanceMatrix dist_;
  std::optional<std::uint64_t> seed_;
};

/// Pick the ignorant agent whose tree path to its nearest knowledgeable
/// agent carries the most ignorant agents; everyone on that path steps
/// toward the knowledgeable end, which steps toward them. Others hold.
class GreedyToSourceAgents : public AgentsStrategy {
 public:
  std::string name() const override { return "greedy-source"; }
  MoveVector move(const GameState& s, const SpanningChoice& choice, Phase phase) override;
};

/// Grid Adversary alternating two spanning trees built around one cycle
/// through the knowledgeable corner.
class GridAlternatingAdversary : public AdversaryStrategy {
 public:
  GridAlternatingAdversary(int rows, int cols);
  std::string name() const override { return "grid-alt"; }
  const Graph& graph() const override { return g_; }
  std::optional<GameState> designated_placement(int k) const override;
  SpanningChoice choose(const GameState& s, Phase phase) override;
  Phase advance(Phase phase, const GameState& before, const SpanningChoice& played,
                const GameState& after) override;

  const GameState& initial_state() const { return start_; }
  const std::vector<Vertex>& cycle() const { return cycle_; }
  const SpanningChoice& tree(int parity) const { return trees_[static_cast<std::size_t>(parity & 1)]; }

 private:
  Graph g_;
  GameState start_;
  std::vector<Vertex> cycle_;
  std::vector<SpanningChoice> trees_;
};

/// Vertex id of 1-based (column, row) on a grid with `cols` columns.
Vertex grid_vertex(int cols, int column, int row);
/// Knowledgeable corner, full second column, later columns missing the top
/// and bottom cell alternately.
GameState grid_pattern_placement(int rows, int cols);

/// Plays the strategy for spanning subgraph G while the board is H.
class RestrictToSubgraph : public AdversaryStrategy {
 public:
  RestrictToSubgraph(std::shared_ptr<AdversaryStrategy> inner, Graph h);
  std::string name() const override { return "restrict(" + inner_->name() + ")"; }
  const Graph& graph() const override { return h_; }
  std::optional<GameState> designated_placement(int k) const override {
    return inner_->designated_placement(k);
  }
  Phase initial_phase(const GameState& s0) override { return inner_->initial_phase(s0); }
  SpanningChoice choose(const GameState& s, Phase phase) override;
  Phase advance(Phase phase, const GameState& before, const SpanningChoice& played,
                const GameState& after) override;

 private:
  std::shared_ptr<AdversaryStrategy> inner_;
  Graph h_;
};

/// Lifts a block strategy to H by treating every agent outside the block as
/// standing on the cut vertex.
class CutVertexLift : public AdversaryStrategy {
 public:
  /// block_vertices[i] is the H vertex playing the block graph's vertex i;
  /// it must contain the cut vertex v.
  CutVertexLift(std::shared_ptr<AdversaryStrategy> block_strategy, Graph h,
                std::vector<Vertex> block_vertices, Vertex v);
  std::string name() const override { return "cutlift(" + inner_->name() + ")"; }
  const Graph& graph() const override { return h_; }
  std::optional<GameState> designated_placement(int k) const override;
  Phase initial_phase(const GameState& s0) override { return inner_->initial_phase(project(s0)); }
  SpanningChoice choose(const GameState& s, Phase phase) override;
  Phase advance(Phase phase, const GameState& before, const SpanningChoice& played,
                const GameState& after) override;

  GameState project(const GameState& s) const;
  VertexMask block_mask() const { return block_mask_; }
  Vertex cut_vertex() const { return v_; }

 private:
  SpanningChoice lift_choice(const SpanningChoice& block_choice) const;

  std::shared_ptr<AdversaryStrategy> inner_;
  Graph h_;
  std::vector<Vertex> block_;
  std::vector<Vertex> to_block_;
  VertexMask block_mask_ = 0;
  Vertex v_;
  std::vector<Edge> outside_tree_;
};

/// Runs an Agents strategy for G (with bridges) on the contracted graph H:
/// a virtual copy of the game on G is kept in the phase, and a step along a
/// contracted edge becomes a hold.
class ContractLiftAgents : public AgentsStrategy {
 public:
  ContractLiftAgents(std::shared_ptr<AgentsStrategy> on_g, Graph g, Contraction contraction);
  std::string name() const override { return "contract(" + inner_->name() + ")"; }
  Phase initial_phase(const GameState& s0) override;
  MoveVector move(const GameState& s, const SpanningChoice& choice, Phase phase) override;
  Phase advance(Phase phase, const GameState& before, const SpanningChoice& played,
                const GameState& after) override;

  /// Puts each H agent on the smallest G vertex of its preimage.
  GameState lift(const GameState& h_state) const;
  const GameState& virtual_state(Phase phase) const { return interned_[phase].first; }

 private:
  struct Step {
    MoveVector h_move;
    GameState g_after;
    Phase g_phase_after;
  };
  Step simulate(const GameState& s, const SpanningChoice& choice, Phase phase);
  Phase intern(GameState g_state, Phase g_phase);

  std::shared_ptr<AgentsStrategy> inner_;
  Graph g_;
  Contraction c_;
  std::vector<Edge> h_edge_source_;  // H edge index -> the G edge it came from
  std::vector<std::pair<GameState, Phase>> interned_;
  std::map<std::pair<GameState, Phase>, Phase> ids_;
};

/// Runs an Agents strategy for the contracted graph H on G: agents first
/// walk to the core vertex of their contracted blob, then mirror H's
/// strategy core to core. Blobs may touch the rest of G at one core only.
class ExpandLiftAgents : public AgentsStrategy {
 public:
  ExpandLiftAgents(std::shared_ptr<AgentsStrategy> on_h, Graph g, Contraction contraction);
  std::string name() const override { return "expand(" + inner_->name() + ")"; }
  Phase initial_phase(const GameState& s0) override;
  MoveVector move(const GameState& s, const SpanningChoice& choice, Phase phase) override;
  Phase advance(Phase phase, const GameState& before, const SpanningChoice& played,
                const GameState& after) override;

  GameState image(const GameState& g_state) const;
  int contracted_edges() const { return static_cast<int>(c_.map.contracted.size()); }

 private:
  bool gathered(const GameState& s) const;

  std::shared_ptr<AgentsStrategy> inner_;
  Graph g_;
  Contraction c_;
  std::vector<Vertex> core_;        // H vertex -> G core vertex
  std::vector<Vertex> toward_core_; // G vertex -> next vertex toward its core
};

/// Plays the witness tree of the current position set, then its image under
/// the stored extension of the agents' one-step function, and repeats.
class StsAdversary : public AdversaryStrategy {
 public:
  explicit StsAdversary(std::shared_ptr<const StsWitness> witness);
  std::string name() const override { return "sts"; }
  const Graph& graph() const override { return witness_->graph; }
  std::optional<GameState> designated_placement(int k) const override;
  SpanningChoice choose(const GameState& s, Phase phase) override;
  Phase advance(Phase phase, const GameState& before, const SpanningChoice& played,
                const GameState& after) override;

 private:
  std::shared_ptr<const StsWitness> witness_;
  std::vector<SpanningChoice> images_;
  std::map<std::vector<Edge>, Phase> image_ids_;
};

}  // namespace broadcast
