#include "broadcast/strategies.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "broadcast/algorithms.hpp"
#include "broadcast/families.hpp"

namespace broadcast {

namespace {

std::vector<int> bfs_from(const Graph& g, Vertex src) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbor_list(u)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Graph without_edge(const Graph& g, Edge drop) {
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (e != drop) edges.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

MoveVector RendezvousAgents::move(const GameState& s, const SpanningChoice& choice, Phase /*phase*/) {
  const Graph& sub = choice.subgraph();
  if (target_ < 0 || target_ >= sub.vertex_count()) throw GameError("rendezvous target out of range");
  auto dist = bfs_from(sub, target_);
  MoveVector mv;
  for (Vertex p : s.slots()) {
    Vertex dest = p;
    for (Vertex w : sub.neighbor_list(p)) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(p)] - 1) {
        dest = w;
        break;
      }
    }
    mv.push_back(dest);
  }
  return mv;
}

CycleAdversary::CycleAdversary(Graph cycle, std::optional<std::uint64_t> seed)
    : g_(std::move(cycle)), dist_(g_.vertex_count()), seed_(seed) {
  if (!is_cycle_graph(g_)) throw GraphError("cycle strategy needs a cycle graph");
  dist_ = all_pairs_distances(g_);
}

std::optional<GameState> CycleAdversary::designated_placement(int k) const {
  if (k == 1) return GameState({0}, {});
  if (k != 2) return std::nullopt;
  const int far = g_.vertex_count() / 2;
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    if (dist_(0, v) == far) return GameState({0}, {v});
  }
  return std::nullopt;
}

Edge CycleAdversary::removed_edge(const GameState& s) const {
  if (s.knowledgeable.empty()) throw GameError("cycle strategy needs a knowledgeable agent");
  Vertex a = s.knowledgeable.front();
  Vertex b = -1;
  for (Vertex kv : s.knowledgeable) {
    for (Vertex iv : s.ignorant) {
      if (b < 0 || dist_(kv, iv) < dist_(a, b)) {
        a = kv;
        b = iv;
      }
    }
  }
  auto nbrs = g_.neighbor_list(a);
  if (b < 0 || a == b) return make_edge(a, nbrs.front());
  std::vector<Vertex> toward;
  for (Vertex w : nbrs) {
    if (dist_(w, b) == dist_(a, b) - 1) toward.push_back(w);
  }
  std::size_t pick = 0;
  if (seed_ && toward.size() > 1) {
    std::size_t h = GameStateHash{}(s) ^ (*seed_ * 0x9e3779b97f4a7c15ULL);
    pick = (h >> 7) % toward.size();
  }
  return make_edge(a, toward[pick]);
}

SpanningChoice CycleAdversary::choose(const GameState& s, Phase /*phase*/) {
  return SpanningChoice::unchecked(without_edge(g_, removed_edge(s)));
}

MoveVector GreedyToSourceAgents::move(const GameState& s, const SpanningChoice& choice, Phase /*phase*/) {
  const Graph& tree = choice.subgraph();
  if (!is_tree(tree)) throw GameError("greedy-source needs a spanning tree");
  MoveVector mv = s.slots();
  if (s.ignorant.empty() || s.knowledgeable.empty()) return mv;
  DistanceMatrix d = bfs_distances(tree);

  std::vector<Vertex> best_path;
  int best_count = -1;
  for (Vertex p : s.ignorant) {
    Vertex q = s.knowledgeable.front();
    for (Vertex kv : s.knowledgeable) {
      if (d(p, kv) < d(p, q)) q = kv;
    }
    auto path = tree_path(tree, p, q);
    int count = 0;
    for (Vertex iv : s.ignorant) {
      if (std::find(path.begin(), path.end(), iv) != path.end()) ++count;
    }
    // Ignorant positions are sorted, so strict > keeps the lowest id on ties.
    if (count > best_count) {
      best_count = count;
      best_path = std::move(path);
    }
  }
  if (best_path.size() < 2) return mv;

  const Vertex source = best_path.back();
  bool source_moved = false;
  const std::size_t nk = s.knowledgeable.size();
  for (std::size_t slot = 0; slot < mv.size(); ++slot) {
    Vertex p = mv[slot];
    auto it = std::find(best_path.begin(), best_path.end(), p);
    if (it == best_path.end()) continue;
    if (p == source) {
      if (slot < nk && !source_moved) {
        mv[slot] = *(it - 1);
        source_moved = true;
      }
      continue;
    }
    mv[slot] = *(it + 1);
  }
  return mv;
}

Vertex grid_vertex(int cols, int column, int row) { return (row - 1) * cols + (column - 1); }

GameState grid_pattern_placement(int rows, int cols) {
  std::vector<Vertex> ignorant;
  for (int c = 2; c <= cols; ++c) {
    for (int r = 1; r <= rows; ++r) {
      if (c >= 3 && c % 2 == 1 && r == 1) continue;
      if (c >= 3 && c % 2 == 0 && r == rows) continue;
      ignorant.push_back(grid_vertex(cols, c, r));
    }
  }
  return GameState({grid_vertex(cols, 1, 1)}, std::move(ignorant));
}

GridAlternatingAdversary::GridAlternatingAdversary(int rows, int cols)
    : g_(grid_graph(std::max(rows, 1), std::max(cols, 1))), start_(grid_pattern_placement(rows, cols)) {
  if (rows < 1 || cols < 2 || (rows <= 2 && cols <= 2)) {
    throw GraphError("grid strategy needs at least two columns and a side longer than 2");
  }
  const Vertex c0 = start_.knowledgeable.front();
  VertexMask ignorant = 0;
  for (Vertex v : start_.ignorant) ignorant |= bit(v);

  // A cycle through the corner whose first two steps are empty and which
  // passes every ignorant agent.
  std::vector<Vertex> path{c0};
  VertexMask on_path = bit(c0);
  std::function<bool()> extend = [&]() {
    Vertex u = path.back();
    for (Vertex w : g_.neighbor_list(u)) {
      if (w == c0 && path.size() >= 4 && (ignorant & ~on_path) == 0) return true;
      if (mask_has(on_path, w)) continue;
      if (path.size() <= 2 && mask_has(ignorant, w)) continue;
      path.push_back(w);
      on_path |= bit(w);
      if (extend()) return true;
      on_path &= ~bit(w);
      path.pop_back();
    }
    return false;
  };
  if (!extend()) throw GraphError("no alternating cycle exists for this grid placement");
  cycle_ = path;
  const std::size_t len = cycle_.size();

  std::vector<Edge> attach;
  std::vector<Vertex> frontier(cycle_.begin(), cycle_.end());
  std::sort(frontier.begin(), frontier.end());
  VertexMask reached = on_path;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (Vertex w : g_.neighbor_list(frontier[i])) {
      if (mask_has(reached, w)) continue;
      reached |= bit(w);
      attach.push_back(make_edge(frontier[i], w));
      frontier.push_back(w);
    }
  }

  auto tree_without = [&](Edge drop) {
    std::vector<Edge> edges = attach;
    for (std::size_t i = 0; i < len; ++i) {
      Edge e = make_edge(cycle_[i], cycle_[(i + 1) % len]);
      if (e != drop) edges.push_back(e);
    }
    return SpanningChoice(g_, std::move(edges));
  };
  trees_.push_back(tree_without(make_edge(cycle_[len - 1], cycle_[0])));
  trees_.push_back(tree_without(make_edge(cycle_[1], cycle_[2])));
}

std::optional<GameState> GridAlternatingAdversary::designated_placement(int k) const {
  if (k != start_.agent_count()) return std::nullopt;
  return start_;
}

SpanningChoice GridAlternatingAdversary::choose(const GameState& /*s*/, Phase phase) {
  return trees_[static_cast<std::size_t>(phase & 1U)];
}

Phase GridAlternatingAdversary::advance(Phase phase, const GameState& /*before*/,
                                        const SpanningChoice& /*played*/, const GameState& /*after*/) {
  return phase ^ 1U;
}

RestrictToSubgraph::RestrictToSubgraph(std::shared_ptr<AdversaryStrategy> inner, Graph h)
    : inner_(std::move(inner)), h_(std::move(h)) {
  const Graph& g = inner_->graph();
  if (g.vertex_count() != h_.vertex_count()) throw GraphError("subgraph must span the same vertices");
  if (!h_.contains_edges_of(g)) throw GraphError("inner graph is not a subgraph of the board");
  if (!is_connected(g)) throw GraphError("inner graph must be connected");
}

SpanningChoice RestrictToSubgraph::choose(const GameState& s, Phase phase) {
  return SpanningChoice(h_, inner_->choose(s, phase).edges());
}

Phase RestrictToSubgraph::advance(Phase phase, const GameState& before, const SpanningChoice& played,
                                  const GameState& after) {
  return inner_->advance(phase, before, played, after);
}

CutVertexLift::CutVertexLift(std::shared_ptr<AdversaryStrategy> block_strategy, Graph h,
                             std::vector<Vertex> block_vertices, Vertex v)
    : inner_(std::move(block_strategy)), h_(std::move(h)), block_(std::move(block_vertices)), v_(v) {
  const int n = h_.vertex_count();
  if (v_ < 0 || v_ >= n) throw GraphError("cut vertex out of range");
  if (!mask_has(cut_vertices(h_), v_)) throw GraphError("vertex " + std::to_string(v_) + " is not a cut vertex");
  to_block_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < block_.size(); ++i) {
    Vertex b = block_[i];
    if (b < 0 || b >= n || to_block_[static_cast<std::size_t>(b)] >= 0) {
      throw GraphError("block vertices must be distinct vertices of H");
    }
    to_block_[static_cast<std::size_t>(b)] = static_cast<Vertex>(i);
    block_mask_ |= bit(b);
  }
  if (!mask_has(block_mask_, v_)) throw GraphError("block must contain the cut vertex");
  if (!(induced_subgraph(h_, block_) == inner_->graph())) {
    throw GraphError("block strategy graph does not match the induced block");
  }
  const VertexMask interior = block_mask_ & ~bit(v_);
  for (Edge e : h_.edges()) {
    if (mask_has(interior, e.u) != mask_has(interior, e.v) && e.u != v_ && e.v != v_) {
      throw GraphError("block touches the rest of H away from the cut vertex");
    }
  }
  // Fixed BFS tree of everything outside the block, hanging from v.
  std::deque<Vertex> queue{v_};
  VertexMask reached = block_mask_;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : h_.neighbor_list(u)) {
      if (mask_has(reached, w)) continue;
      reached |= bit(w);
      outside_tree_.push_back(make_edge(u, w));
      queue.push_back(w);
    }
  }
  if (reached != h_.all_vertices()) throw GraphError("H is not connected");
}

GameState CutVertexLift::project(const GameState& s) const {
  auto map = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex p : vs) {
      Vertex b = to_block_[static_cast<std::size_t>(p)];
      out.push_back(b >= 0 ? b : to_block_[static_cast<std::size_t>(v_)]);
    }
    return out;
  };
  return GameState(map(s.knowledgeable), map(s.ignorant));
}

std::optional<GameState> CutVertexLift::designated_placement(int k) const {
  auto p = inner_->designated_placement(k);
  if (!p) return std::nullopt;
  auto map = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex b : vs) out.push_back(block_[static_cast<std::size_t>(b)]);
    return out;
  };
  return GameState(map(p->knowledgeable), map(p->ignorant));
}

SpanningChoice CutVertexLift::lift_choice(const SpanningChoice& block_choice) const {
  std::vector<Edge> edges = outside_tree_;
  for (Edge e : block_choice.edges()) {
    edges.push_back(make_edge(block_[static_cast<std::size_t>(e.u)], block_[static_cast<std::size_t>(e.v)]));
  }
  return SpanningChoice(h_, std::move(edges));
}

SpanningChoice CutVertexLift::choose(const GameState& s, Phase phase) {
  return lift_choice(inner_->choose(project(s), phase));
}

Phase CutVertexLift::advance(Phase phase, const GameState& before, const SpanningChoice& /*played*/,
                             const GameState& after) {
  GameState pb = project(before);
  SpanningChoice block_choice = inner_->choose(pb, phase);
  return inner_->advance(phase, pb, block_choice, project(after));
}

ContractLiftAgents::ContractLiftAgents(std::shared_ptr<AgentsStrategy> on_g, Graph g, Contraction contraction)
    : inner_(std::move(on_g)), g_(std::move(g)), c_(std::move(contraction)) {
  if (!is_valid_contraction(g_, c_.graph, c_.map)) throw GraphError("contraction does not match G");
  h_edge_source_.resize(c_.graph.edge_count());
  for (Edge e : g_.edges()) {
    if (c_.map.is_contracted(e)) continue;
    Edge img = make_edge(c_.map.to_target[static_cast<std::size_t>(e.u)],
                         c_.map.to_target[static_cast<std::size_t>(e.v)]);
    h_edge_source_[static_cast<std::size_t>(c_.graph.edge_index(img))] = e;
  }
}

GameState ContractLiftAgents::lift(const GameState& h_state) const {
  auto map = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex h : vs) out.push_back(c_.map.preimage(h).front());
    return out;
  };
  return GameState(map(h_state.knowledgeable), map(h_state.ignorant));
}

Phase ContractLiftAgents::intern(GameState g_state, Phase g_phase) {
  auto key = std::make_pair(std::move(g_state), g_phase);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  Phase id = interned_.size();
  ids_.emplace(key, id);
  interned_.push_back(std::move(key));
  return id;
}

Phase ContractLiftAgents::initial_phase(const GameState& s0) {
  GameState vg = lift(s0);
  Phase gp = inner_->initial_phase(vg);
  return intern(std::move(vg), gp);
}

ContractLiftAgents::Step ContractLiftAgents::simulate(const GameState& s, const SpanningChoice& choice,
                                                      Phase phase) {
  if (phase >= interned_.size()) throw GameError("unknown contract-lift phase");
  const GameState vg = interned_[phase].first;
  const Phase gp = interned_[phase].second;

  std::vector<Edge> g_edges = c_.map.contracted;
  for (Edge e : choice.edges()) {
    int idx = c_.graph.edge_index(e);
    if (idx < 0) throw GameError("choice edge is not an edge of the contracted graph");
    g_edges.push_back(h_edge_source_[static_cast<std::size_t>(idx)]);
  }
  SpanningChoice g_choice = SpanningChoice::unchecked(Graph(g_.vertex_count(), std::move(g_edges)));
  MoveVector g_move = inner_->move(vg, g_choice, gp);
  check_move(vg, g_choice, g_move);
  GameState g_after = resolve_moves(vg, g_move);
  Phase gp_after = inner_->advance(gp, vg, g_choice, g_after);

  // Pair H agents with virtual agents on the same H vertex, knowledgeable first.
  const int hn = c_.graph.vertex_count();
  std::vector<std::deque<Vertex>> pending(static_cast<std::size_t>(hn));
  auto v_slots = vg.slots();
  for (std::size_t j = 0; j < v_slots.size(); ++j) {
    Vertex at = c_.map.to_target[static_cast<std::size_t>(v_slots[j])];
    pending[static_cast<std::size_t>(at)].push_back(c_.map.to_target[static_cast<std::size_t>(g_move[j])]);
  }
  MoveVector h_move;
  for (Vertex p : s.slots()) {
    auto& q = pending[static_cast<std::size_t>(p)];
    if (q.empty()) throw GameError("virtual game is out of step with the board");
    h_move.push_back(q.front());
    q.pop_front();
  }
  return Step{std::move(h_move), std::move(g_after), gp_after};
}

MoveVector ContractLiftAgents::move(const GameState& s, const SpanningChoice& choice, Phase phase) {
  return simulate(s, choice, phase).h_move;
}

Phase ContractLiftAgents::advance(Phase phase, const GameState& before, const SpanningChoice& played,
                                  const GameState& /*after*/) {
  Step step = simulate(before, played, phase);
  return intern(std::move(step.g_after), step.g_phase_after);
}

ExpandLiftAgents::ExpandLiftAgents(std::shared_ptr<AgentsStrategy> on_h, Graph g, Contraction contraction)
    : inner_(std::move(on_h)), g_(std::move(g)), c_(std::move(contraction)) {
  if (!is_valid_contraction(g_, c_.graph, c_.map)) throw GraphError("contraction does not match G");
  const int gn = g_.vertex_count();
  const int hn = c_.graph.vertex_count();
  VertexMask attached = 0;
  for (Edge e : g_.edges()) {
    if (!c_.map.is_contracted(e)) attached |= bit(e.u) | bit(e.v);
  }
  core_.assign(static_cast<std::size_t>(hn), -1);
  for (Vertex h = 0; h < hn; ++h) {
    auto blob = c_.map.preimage(h);
    for (Vertex x : blob) {
      if (!mask_has(attached, x)) continue;
      if (core_[static_cast<std::size_t>(h)] >= 0) {
        throw GraphError("a contracted blob meets the rest of G at more than one vertex");
      }
      core_[static_cast<std::size_t>(h)] = x;
    }
    if (core_[static_cast<std::size_t>(h)] < 0) core_[static_cast<std::size_t>(h)] = blob.front();
  }
  // Parent pointers toward each core along contracted edges.
  Graph blobs(gn, c_.map.contracted);
  toward_core_.assign(static_cast<std::size_t>(gn), -1);
  for (Vertex h = 0; h < hn; ++h) {
    Vertex root = core_[static_cast<std::size_t>(h)];
    toward_core_[static_cast<std::size_t>(root)] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : blobs.neighbor_list(u)) {
        if (toward_core_[static_cast<std::size_t>(w)] >= 0) continue;
        toward_core_[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
}

GameState ExpandLiftAgents::image(const GameState& g_state) const {
  auto map = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex x : vs) out.push_back(c_.map.to_target[static_cast<std::size_t>(x)]);
    return out;
  };
  return GameState(map(g_state.knowledgeable), map(g_state.ignorant));
}

bool ExpandLiftAgents::gathered(const GameState& s) const {
  for (Vertex p : s.slots()) {
    if (toward_core_[static_cast<std::size_t>(p)] != p) return false;
  }
  return true;
}

Phase ExpandLiftAgents::initial_phase(const GameState& s0) {
  return gathered(s0) ? inner_->initial_phase(image(s0)) + 1 : 0;
}

namespace {

SpanningChoice contracted_choice(const Contraction& c, const SpanningChoice& g_choice) {
  std::vector<Edge> edges;
  for (Edge e : g_choice.edges()) {
    if (c.map.is_contracted(e)) continue;
    edges.push_back(make_edge(c.map.to_target[static_cast<std::size_t>(e.u)],
                              c.map.to_target[static_cast<std::size_t>(e.v)]));
  }
  return SpanningChoice::unchecked(Graph(c.graph.vertex_count(), std::move(edges)));
}

}  // namespace

MoveVector ExpandLiftAgents::move(const GameState& s, const SpanningChoice& choice, Phase phase) {
  MoveVector mv;
  if (phase == 0) {
    for (Vertex p : s.slots()) mv.push_back(toward_core_[static_cast<std::size_t>(p)]);
    return mv;
  }
  GameState hs = image(s);
  SpanningChoice h_choice = contracted_choice(c_, choice);
  MoveVector h_move = inner_->move(hs, h_choice, phase - 1);
  check_move(hs, h_choice, h_move);

  // Agents of one class on one vertex are interchangeable; hand out the H
  // destinations per (class, vertex) in slot order.
  const std::size_t hk = hs.knowledgeable.size();
  auto h_slots = hs.slots();
  std::map<std::pair<bool, Vertex>, std::deque<Vertex>> pending;
  for (std::size_t j = 0; j < h_slots.size(); ++j) {
    pending[{j < hk, h_slots[j]}].push_back(h_move[j]);
  }
  const std::size_t gk = s.knowledgeable.size();
  auto g_slots = s.slots();
  for (std::size_t j = 0; j < g_slots.size(); ++j) {
    auto& q = pending[{j < gk, c_.map.to_target[static_cast<std::size_t>(g_slots[j])]}];
    mv.push_back(core_[static_cast<std::size_t>(q.front())]);
    q.pop_front();
  }
  return mv;
}

Phase ExpandLiftAgents::advance(Phase phase, const GameState& before, const SpanningChoice& played,
                                const GameState& after) {
  if (phase == 0) return gathered(after) ? inner_->initial_phase(image(after)) + 1 : 0;
  return inner_->advance(phase - 1, image(before), contracted_choice(c_, played), image(after)) + 1;
}

StsAdversary::StsAdversary(std::shared_ptr<const StsWitness> witness) : witness_(std::move(witness)) {}

std::optional<GameState> StsAdversary::designated_placement(int k) const {
  if (k != witness_->k || witness_->entries.empty()) return std::nullopt;
  const auto& s = witness_->entries.front().positions;
  return GameState({s.front()}, std::vector<Vertex>(s.begin() + 1, s.end()));
}

namespace {

const StsEntry& entry_for(const StsWitness& w, const GameState& s) {
  auto positions = s.slots();
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end() ||
      static_cast<int>(positions.size()) != w.k) {
    throw GameError("state " + to_string(s) + " is outside the witness domain");
  }
  const StsEntry* e = w.find(positions);
  if (!e) throw GameError("state " + to_string(s) + " is outside the witness domain");
  return *e;
}

}  // namespace

SpanningChoice StsAdversary::choose(const GameState& s, Phase phase) {
  if (phase == 0) return SpanningChoice::unchecked(entry_for(*witness_, s).tree);
  return images_.at(static_cast<std::size_t>(phase - 1));
}

Phase StsAdversary::advance(Phase phase, const GameState& before, const SpanningChoice& /*played*/,
                            const GameState& after) {
  if (phase != 0) return 0;
  const StsEntry& e = entry_for(*witness_, before);
  auto after_slots = after.slots();
  std::vector<Vertex> image;
  for (Vertex p : e.positions) {
    VertexMask reach = e.tree.neighbors(p) | bit(p);
    Vertex found = -1;
    for (Vertex q : after_slots) {
      if (!mask_has(reach, q)) continue;
      if (found >= 0) throw GameError("agents left the one-step pattern of the witness tree");
      found = q;
    }
    if (found < 0) throw GameError("agents left the one-step pattern of the witness tree");
    image.push_back(found);
  }
  auto it = e.extensions.find(image);
  if (it == e.extensions.end()) throw GameError("witness has no extension for this move");
  const auto& phi = it->second;
  std::vector<Edge> edges;
  for (Edge te : e.tree.edges()) {
    edges.push_back(make_edge(phi[static_cast<std::size_t>(te.u)], phi[static_cast<std::size_t>(te.v)]));
  }
  std::sort(edges.begin(), edges.end());
  auto [slot, fresh] = image_ids_.emplace(edges, images_.size() + 1);
  if (fresh) images_.push_back(SpanningChoice::unchecked(Graph(witness_->graph.vertex_count(), edges)));
  return slot->second;
}

}  // namespace broadcast
