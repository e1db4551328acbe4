#include "broadcast/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace broadcast {

const char* to_string(Winner w) { return w == Winner::Agents ? "Agents" : "Adversary"; }

const char* to_string(PlacementRule r) {
  return r == PlacementRule::AdversaryPlaces ? "AdversaryPlaces" : "AgentsPlace";
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

StateIndexer::StateIndexer(int vertex_count, int agents, int min_knowledgeable)
    : n_(vertex_count), agents_(agents), min_k_(min_knowledgeable) {
  if (n_ < 1 || n_ > Graph::kMaxVertices) throw GameError("state universe needs 1..64 vertices");
  if (agents_ < 1 || agents_ > 32) throw GameError("state universe needs 1..32 agents");
  if (min_k_ < 0 || min_k_ > agents_) throw GameError("minimum knowledgeable count out of range");
  binom_rows_ = n_ + agents_ + 1;
  const int cols = agents_ + 2;
  binom_.assign(static_cast<std::size_t>(binom_rows_ * cols), 0);
  for (int a = 0; a < binom_rows_; ++a) {
    for (int b = 0; b < cols; ++b) {
      std::uint64_t v = 0;
      if (b == 0) {
        v = 1;
      } else if (a > 0) {
        v = sat_add(binom_[static_cast<std::size_t>((a - 1) * cols + b - 1)],
                    binom_[static_cast<std::size_t>((a - 1) * cols + b)]);
      }
      binom_[static_cast<std::size_t>(a * cols + b)] = v;
    }
  }
  std::uint64_t total = 0;
  for (int j = min_k_; j <= agents_; ++j) {
    offset_.push_back(static_cast<std::size_t>(total));
    total = sat_add(total, sat_mul(multisets(j), multisets(agents_ - j)));
  }
  size_ = total > std::numeric_limits<std::size_t>::max() ? std::numeric_limits<std::size_t>::max()
                                                           : static_cast<std::size_t>(total);
}

std::uint64_t StateIndexer::binom(int a, int b) const {
  if (b < 0 || a < b) return 0;
  return binom_[static_cast<std::size_t>(a * (agents_ + 2) + b)];
}

std::uint64_t StateIndexer::multisets(int size) const { return binom(n_ + size - 1, size); }

// Combinatorial number system on a_i + i, which is strictly increasing.
std::uint64_t StateIndexer::rank_multiset(const std::uint8_t* sorted, int size) const {
  std::uint64_t r = 0;
  for (int i = 0; i < size; ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

void StateIndexer::unrank_multiset(std::uint64_t r, int size, std::vector<Vertex>& out) const {
  out.assign(static_cast<std::size_t>(size), 0);
  for (int i = size - 1; i >= 0; --i) {
    int b = i;
    while (binom(b + 1, i + 1) <= r) ++b;
    r -= binom(b, i + 1);
    out[static_cast<std::size_t>(i)] = b - i;
  }
}

std::size_t StateIndexer::index_slots(const std::uint8_t* slots, int knowledgeable) const {
  const int ignorant = agents_ - knowledgeable;
  return offset_[static_cast<std::size_t>(knowledgeable - min_k_)] +
         static_cast<std::size_t>(rank_multiset(slots, knowledgeable) * multisets(ignorant) +
                                  rank_multiset(slots + knowledgeable, ignorant));
}

bool StateIndexer::in_universe(const GameState& s) const {
  if (s.agent_count() != agents_ || static_cast<int>(s.knowledgeable.size()) < min_k_) return false;
  for (Vertex v : s.slots()) {
    if (v < 0 || v >= n_) return false;
  }
  return true;
}

std::size_t StateIndexer::index(const GameState& s) const {
  if (!in_universe(s)) throw GameError("state " + to_string(s) + " is outside the solved universe");
  std::uint8_t slots[64];
  auto all = s.slots();
  for (std::size_t i = 0; i < all.size(); ++i) slots[i] = static_cast<std::uint8_t>(all[i]);
  return index_slots(slots, static_cast<int>(s.knowledgeable.size()));
}

GameState StateIndexer::state(std::size_t idx) const {
  int j = agents_;
  while (j > min_k_ && offset_[static_cast<std::size_t>(j - min_k_)] > idx) --j;
  std::uint64_t local = idx - offset_[static_cast<std::size_t>(j - min_k_)];
  std::uint64_t per = multisets(agents_ - j);
  std::vector<Vertex> k;
  std::vector<Vertex> i;
  unrank_multiset(local / per, j, k);
  unrank_multiset(local % per, agents_ - j, i);
  return GameState(std::move(k), std::move(i));
}

namespace {

// Enumerates successors of one state under one choice; identical co-located
// agents pick nondecreasing destinations.
class SuccessorWalker {
 public:
  SuccessorWalker(const StateIndexer& indexer, const std::uint8_t* from, int knowledgeable,
                  const VertexMask* closed)
      : indexer_(indexer), from_(from), nk_(knowledgeable), agents_(indexer.agents()), closed_(closed) {}

  /// Calls visit(successor index) until it returns true; reports whether it did.
  template <class Visit>
  bool run(Visit&& visit) {
    return rec(0, visit);
  }

  const std::uint8_t* destinations() const { return dest_; }

 private:
  template <class Visit>
  bool rec(int i, Visit& visit) {
    if (i == agents_) return visit(successor());
    VertexMask options = closed_[from_[i]];
    if (i > 0 && i != nk_ && from_[i] == from_[i - 1]) {
      options &= ~(bit(dest_[i - 1]) - 1);
    }
    while (options != 0) {
      dest_[i] = static_cast<std::uint8_t>(__builtin_ctzll(options));
      options &= options - 1;
      if (rec(i + 1, visit)) return true;
    }
    return false;
  }

  std::size_t successor() {
    VertexMask informed = 0;
    int nk = 0;
    for (int i = 0; i < nk_; ++i) {
      informed |= bit(dest_[i]);
      buf_[nk++] = dest_[i];
    }
    int ni = 0;
    for (int i = nk_; i < agents_; ++i) {
      if (mask_has(informed, dest_[i])) {
        buf_[nk++] = dest_[i];
      } else {
        ign_[ni++] = dest_[i];
      }
    }
    std::sort(buf_, buf_ + nk);
    std::sort(ign_, ign_ + ni);
    std::copy(ign_, ign_ + ni, buf_ + nk);
    return indexer_.index_slots(buf_, nk);
  }

  const StateIndexer& indexer_;
  const std::uint8_t* from_;
  int nk_;
  int agents_;
  const VertexMask* closed_;
  std::uint8_t dest_[64]{};
  std::uint8_t buf_[64]{};
  std::uint8_t ign_[64]{};
};

std::vector<VertexMask> closed_neighborhoods(const SpanningChoice& c) {
  const int n = c.subgraph().vertex_count();
  std::vector<VertexMask> out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = c.closed_neighborhood(v);
  return out;
}

void state_slots(const GameState& s, std::uint8_t* out) {
  std::size_t i = 0;
  for (Vertex v : s.knowledgeable) out[i++] = static_cast<std::uint8_t>(v);
  for (Vertex v : s.ignorant) out[i++] = static_cast<std::uint8_t>(v);
}

}  // namespace

AttractorTable::AttractorTable(const Graph& g, int agents, int min_knowledgeable, Goal goal,
                               const SolverOptions& options)
    : graph_(g), indexer_(g.vertex_count(), agents, min_knowledgeable), goal_(goal) {
  if (!is_connected(g)) throw GraphError("solver needs a connected graph");
  if (indexer_.size() > options.max_states) {
    throw BudgetExceeded("state space of " + std::to_string(indexer_.size()) +
                         " states exceeds the budget of " + std::to_string(options.max_states));
  }
  std::vector<Graph> subgraphs = options.all_connected_subgraphs
                                     ? connected_spanning_subgraphs(g, options.max_trees)
                                     : spanning_trees(g, options.max_trees);
  choices_.reserve(subgraphs.size());
  for (auto& sg : subgraphs) choices_.push_back(SpanningChoice::unchecked(std::move(sg)));
  solve(options);
}

bool AttractorTable::is_goal(const GameState& s) const {
  if (goal_ == Goal::AllKnowledgeable) return s.ignorant.empty();
  return static_cast<int>(s.knowledgeable.size()) > indexer_.min_knowledgeable();
}

void AttractorTable::solve(const SolverOptions& options) {
  const std::size_t size = indexer_.size();
  const int k = indexer_.agents();
  const int n = graph_.vertex_count();
  const std::size_t choice_count = choices_.size();

  std::vector<std::uint8_t> positions(size * static_cast<std::size_t>(k));
  std::vector<std::uint8_t> kcount(size);
  ranks_.assign(size, kUnreached);
  std::vector<std::size_t> pending;
  for (std::size_t idx = 0; idx < size; ++idx) {
    GameState s = indexer_.state(idx);
    state_slots(s, &positions[idx * static_cast<std::size_t>(k)]);
    kcount[idx] = static_cast<std::uint8_t>(s.knowledgeable.size());
    if (is_goal(s)) {
      ranks_[idx] = 0;
    } else {
      pending.push_back(idx);
    }
  }

  std::vector<VertexMask> closed(choice_count * static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < choice_count; ++c) {
    auto nb = closed_neighborhoods(choices_[c]);
    std::copy(nb.begin(), nb.end(), closed.begin() + static_cast<std::ptrdiff_t>(c * static_cast<std::size_t>(n)));
  }

  // Last choice that blocked each state; tried first next sweep.
  std::vector<std::uint32_t> blocker(size, 0);

  auto escapes = [&](std::size_t idx) {
    const std::uint8_t* from = &positions[idx * static_cast<std::size_t>(k)];
    const std::size_t start = blocker[idx];
    for (std::size_t step = 0; step < choice_count; ++step) {
      std::size_t c = (start + step) % choice_count;
      SuccessorWalker walker(indexer_, from, kcount[idx], &closed[c * static_cast<std::size_t>(n)]);
      bool reply = walker.run([&](std::size_t succ) { return ranks_[succ] != kUnreached; });
      if (!reply) {
        blocker[idx] = static_cast<std::uint32_t>(c);
        return false;
      }
    }
    return true;
  };

  const unsigned threads = std::max(1U, options.threads);
  int r = 0;
  while (!pending.empty()) {
    ++iterations_;
    // Ranks are only written after the sweep, so every worker reads the same snapshot.
    std::vector<std::vector<std::size_t>> fresh(threads);
    std::vector<std::vector<std::size_t>> kept(threads);
    auto work = [&](unsigned t) {
      std::size_t lo = pending.size() * t / threads;
      std::size_t hi = pending.size() * (t + 1) / threads;
      for (std::size_t p = lo; p < hi; ++p) {
        std::size_t idx = pending[p];
        (escapes(idx) ? fresh[t] : kept[t]).push_back(idx);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    bool progress = false;
    pending.clear();
    for (unsigned t = 0; t < threads; ++t) {
      for (std::size_t idx : fresh[t]) {
        ranks_[idx] = r + 1;
        progress = true;
      }
      pending.insert(pending.end(), kept[t].begin(), kept[t].end());
    }
    if (!progress) break;
    ++r;
  }
}

std::optional<int> AttractorTable::rank(const GameState& s) const {
  int r = ranks_[indexer_.index(s)];
  if (r == kUnreached) return std::nullopt;
  return r;
}

std::optional<int> AttractorTable::choice_value(const GameState& s, const SpanningChoice& choice) const {
  if (is_goal(s)) return 0;
  std::uint8_t from[64];
  state_slots(s, from);
  auto closed = closed_neighborhoods(choice);
  int best = kUnreached;
  SuccessorWalker walker(indexer_, from, static_cast<int>(s.knowledgeable.size()), closed.data());
  walker.run([&](std::size_t succ) {
    int r = ranks_[succ];
    if (r != kUnreached && (best == kUnreached || r < best)) best = r;
    return best == 0;
  });
  if (best == kUnreached) return std::nullopt;
  return best;
}

std::size_t AttractorTable::worst_choice(const GameState& s) const {
  std::size_t worst = 0;
  int worst_value = -1;
  for (std::size_t c = 0; c < choices_.size(); ++c) {
    auto v = choice_value(s, choices_[c]);
    if (!v) return c;
    if (*v > worst_value) {
      worst_value = *v;
      worst = c;
    }
  }
  return worst;
}

MoveVector AttractorTable::best_move(const GameState& s, const SpanningChoice& choice) const {
  MoveVector best = s.slots();
  if (is_goal(s)) return best;
  int best_rank = kUnreached;
  std::uint8_t from[64];
  state_slots(s, from);
  auto closed = closed_neighborhoods(choice);
  SuccessorWalker walker(indexer_, from, static_cast<int>(s.knowledgeable.size()), closed.data());
  walker.run([&](std::size_t succ) {
    int r = ranks_[succ];
    if (r != kUnreached && (best_rank == kUnreached || r < best_rank)) {
      best_rank = r;
      const std::uint8_t* d = walker.destinations();
      best.assign(d, d + s.agent_count());
    }
    return best_rank == 0;
  });
  return best;
}

AttractorTable agents_attractor(const Graph& g, int k, const SolverOptions& options) {
  if (k < 1 || k > g.vertex_count()) throw GameError("k must lie in 1..vertex count");
  return AttractorTable(g, k, 1, Goal::AllKnowledgeable, options);
}

AttractorTable config_attractor(const Graph& g, int x, int y, Goal goal, const SolverOptions& options) {
  if (x < 0 || y < 1 || x + y > g.vertex_count()) {
    throw GameError("configuration needs x >= 0, y >= 1 and x + y <= vertex count");
  }
  return AttractorTable(g, x + y, y, goal, options);
}

Classification classify_with(const AttractorTable& table, PlacementRule rule) {
  Classification c;
  c.rule = rule;
  c.state_count = table.state_count();
  c.iterations = table.iterations();
  auto placements = config_placements(table.graph(), table.agents() - table.min_knowledgeable(),
                                      table.min_knowledgeable());
  if (rule == PlacementRule::AdversaryPlaces) {
    int worst = 0;
    for (const auto& p : placements) {
      auto r = table.rank(p);
      if (!r) {
        c.winner = Winner::Adversary;
        c.witness_placement = p;
        return c;
      }
      worst = std::max(worst, *r);
    }
    c.winner = Winner::Agents;
    c.optimal_time = worst;
    return c;
  }
  std::optional<int> best;
  for (const auto& p : placements) {
    auto r = table.rank(p);
    if (r && (!best || *r < *best)) best = r;
  }
  if (best) {
    c.winner = Winner::Agents;
    c.optimal_time = best;
  } else {
    c.winner = Winner::Adversary;
    c.witness_placement = placements.front();
  }
  return c;
}

Classification classify(const Graph& g, int k, PlacementRule rule, const SolverOptions& options) {
  return classify_with(agents_attractor(g, k, options), rule);
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["winner"] = to_string(c.winner);
  j["optimal_time"] = c.optimal_time ? nlohmann::json(*c.optimal_time) : nlohmann::json(nullptr);
  j["witness_placement"] = c.witness_placement ? to_json(*c.witness_placement) : nlohmann::json(nullptr);
  j["placement_rule"] = to_string(c.rule);
  j["state_count"] = c.state_count;
  j["iterations"] = c.iterations;
  return j;
}

ConfigTimes classify_config(const Graph& g, int x, int y, const SolverOptions& options) {
  ConfigTimes t;
  t.ignorant = x;
  t.knowledgeable = y;
  if (x == 0) {
    // Nobody is left to inform.
    if (y < 1 || y > g.vertex_count()) throw GameError("configuration needs 1 <= y <= vertex count");
    t.first_spread_time = 0;
    t.win_time = 0;
    return t;
  }
  auto worst = [&](const AttractorTable& table) -> std::optional<int> {
    auto c = classify_with(table, PlacementRule::AdversaryPlaces);
    return c.optimal_time;
  };
  AttractorTable spread = config_attractor(g, x, y, Goal::FirstSpread, options);
  t.first_spread_time = worst(spread);
  AttractorTable all = config_attractor(g, x, y, Goal::AllKnowledgeable, options);
  t.win_time = worst(all);
  t.state_count = all.state_count();
  return t;
}

nlohmann::json to_json(const ConfigTimes& t) {
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"ignorant", t.ignorant},
          {"knowledgeable", t.knowledgeable},
          {"first_spread_time", opt(t.first_spread_time)},
          {"win_time", opt(t.win_time)},
          {"state_count", t.state_count}};
}

bool tree_reduction_equivalence_check(const Graph& g, int k, const SolverOptions& options) {
  if (g.edge_count() > 12) throw BudgetExceeded("tree reduction check supports at most 12 edges");
  SolverOptions trees = options;
  trees.all_connected_subgraphs = false;
  SolverOptions full = options;
  full.all_connected_subgraphs = true;
  full.max_trees = std::max<std::size_t>(options.max_trees, 1U << 12);
  return agents_attractor(g, k, trees).ranks() == agents_attractor(g, k, full).ranks();
}

OptimalAdversary::OptimalAdversary(std::shared_ptr<const AttractorTable> table) : table_(std::move(table)) {}

std::optional<GameState> OptimalAdversary::designated_placement(int k) const {
  if (k != table_->agents()) return std::nullopt;
  auto placements = config_placements(table_->graph(), k - table_->min_knowledgeable(),
                                      table_->min_knowledgeable());
  std::optional<GameState> slowest;
  int slowest_rank = -1;
  for (const auto& p : placements) {
    auto r = table_->rank(p);
    if (!r) return p;
    if (*r > slowest_rank) {
      slowest_rank = *r;
      slowest = p;
    }
  }
  return slowest;
}

SpanningChoice OptimalAdversary::choose(const GameState& s, Phase /*phase*/) {
  return table_->choices()[table_->worst_choice(s)];
}

OptimalAgents::OptimalAgents(std::shared_ptr<const AttractorTable> table) : table_(std::move(table)) {}

MoveVector OptimalAgents::move(const GameState& s, const SpanningChoice& choice, Phase /*phase*/) {
  return table_->best_move(s, choice);
}

nlohmann::json to_json(const Counterexample& c) {
  nlohmann::json line = nlohmann::json::array();
  for (const auto& step : c.line) {
    line.push_back({{"subgraph_edges", edges_to_json(step.choice)}, {"after", to_json(step.after)}});
  }
  return {{"placement", to_json(c.placement)}, {"line", line}};
}

std::optional<Counterexample> refute_adversary_strategy(const Graph& g, int k, AdversaryStrategy& adv,
                                                        PlacementRule rule, std::size_t max_nodes) {
  std::vector<GameState> starts;
  if (rule == PlacementRule::AdversaryPlaces) {
    auto p = adv.designated_placement(k);
    if (!p) throw GameError("strategy '" + adv.name() + "' has no designated placement for k=" + std::to_string(k));
    if (p->agent_count() != k) throw GameError("designated placement has the wrong agent count");
    starts.push_back(*p);
  } else {
    starts = initial_placements(g, k);
  }

  struct Node {
    GameState state;
    Phase phase;
    int parent;
    std::vector<Edge> via;
  };
  std::vector<Node> nodes;
  std::map<std::pair<GameState, Phase>, int> ids;
  std::deque<int> queue;

  auto reconstruct = [&](int id) {
    std::vector<int> chain;
    for (int at = id; at >= 0; at = nodes[static_cast<std::size_t>(at)].parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());
    Counterexample ce{nodes[static_cast<std::size_t>(chain.front())].state, {}};
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Node& nd = nodes[static_cast<std::size_t>(chain[i])];
      ce.line.push_back(LineStep{nd.via, nd.state});
    }
    return ce;
  };

  auto add = [&](GameState s, Phase ph, int parent, std::vector<Edge> via) -> int {
    auto [it, fresh] = ids.emplace(std::make_pair(s, ph), static_cast<int>(nodes.size()));
    if (!fresh) return -1;
    if (nodes.size() >= max_nodes) throw BudgetExceeded("refutation search exceeded its node budget");
    nodes.push_back(Node{std::move(s), ph, parent, std::move(via)});
    queue.push_back(it->second);
    return it->second;
  };

  for (const auto& s0 : starts) {
    int id = add(s0, adv.initial_phase(s0), -1, {});
    if (id >= 0 && is_agents_win(s0)) return reconstruct(id);
  }

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    GameState state = nodes[static_cast<std::size_t>(id)].state;
    Phase phase = nodes[static_cast<std::size_t>(id)].phase;
    SpanningChoice choice = adv.choose(state, phase);
    check_choice(g, choice);
    std::set<GameState> successors;
    for_each_move(state, choice, [&](const MoveVector& mv) {
      successors.insert(resolve_moves(state, mv));
      return true;
    });
    for (const auto& after : successors) {
      Phase next = adv.advance(phase, state, choice, after);
      int child = add(after, next, id, choice.edges());
      if (child >= 0 && is_agents_win(after)) return reconstruct(child);
    }
  }
  return std::nullopt;
}

AgentsEvaluation evaluate_agents_strategy(const Graph& g, const GameState& s0, AgentsStrategy& ag,
                                          const SolverOptions& options) {
  AgentsEvaluation result;
  if (is_agents_win(s0)) {
    result.worst_case_time = 0;
    return result;
  }
  std::vector<SpanningChoice> trees;
  for (auto& t : spanning_trees(g, options.max_trees)) trees.push_back(SpanningChoice::unchecked(std::move(t)));

  using Key = std::pair<GameState, Phase>;
  constexpr int kOnStack = -1;
  std::map<Key, int> value;
  struct Frame {
    Key key;
    std::size_t next = 0;
    int best = 0;
    std::vector<Edge> via;
  };
  std::vector<Frame> stack;
  Key root{s0, ag.initial_phase(s0)};
  value[root] = kOnStack;
  stack.push_back(Frame{root, 0, 0, {}});

  while (true) {
    Frame& f = stack.back();
    if (f.next == trees.size()) {
      int v = f.best;
      value[f.key] = v;
      stack.pop_back();
      if (stack.empty()) {
        result.worst_case_time = v;
        return result;
      }
      stack.back().best = std::max(stack.back().best, v + 1);
      continue;
    }
    const SpanningChoice& tree = trees[f.next++];
    const GameState state = f.key.first;
    const Phase phase = f.key.second;
    MoveVector mv = ag.move(state, tree, phase);
    check_move(state, tree, mv);
    GameState after = resolve_moves(state, mv);
    if (is_agents_win(after)) {
      f.best = std::max(f.best, 1);
      continue;
    }
    Key child{after, ag.advance(phase, state, tree, after)};
    auto it = value.find(child);
    if (it != value.end() && it->second == kOnStack) {
      for (std::size_t i = 1; i < stack.size(); ++i) {
        result.counterline.push_back(LineStep{stack[i].via, stack[i].key.first});
        if (stack[i].key == child) result.cycle_start = static_cast<int>(i);
      }
      if (stack.front().key == child) result.cycle_start = 0;
      result.counterline.push_back(LineStep{tree.edges(), after});
      return result;
    }
    if (it != value.end()) {
      f.best = std::max(f.best, it->second + 1);
      continue;
    }
    if (value.size() >= options.max_states) {
      throw BudgetExceeded("agents strategy evaluation exceeded its state budget");
    }
    value.emplace(child, kOnStack);
    stack.push_back(Frame{child, 0, 0, tree.edges()});
  }
}

}  // namespace broadcast
