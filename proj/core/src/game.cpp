#include "broadcast/game.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "broadcast/algorithms.hpp"
#include "broadcast/strategy.hpp"

namespace broadcast {

GameState::GameState(std::vector<Vertex> k, std::vector<Vertex> i)
    : knowledgeable(std::move(k)), ignorant(std::move(i)) {
  std::sort(knowledgeable.begin(), knowledgeable.end());
  std::sort(ignorant.begin(), ignorant.end());
}

std::vector<Vertex> GameState::slots() const {
  std::vector<Vertex> out = knowledgeable;
  out.insert(out.end(), ignorant.begin(), ignorant.end());
  return out;
}

VertexMask GameState::occupied() const {
  VertexMask m = 0;
  for (Vertex v : knowledgeable) m |= bit(v);
  for (Vertex v : ignorant) m |= bit(v);
  return m;
}

std::size_t GameStateHash::operator()(const GameState& s) const {
  std::size_t h = s.knowledgeable.size() * 0x9e3779b97f4a7c15ULL;
  for (Vertex v : s.knowledgeable) h = (h ^ static_cast<std::size_t>(v + 1)) * 0x100000001b3ULL;
  h ^= 0xff;
  for (Vertex v : s.ignorant) h = (h ^ static_cast<std::size_t>(v + 1)) * 0x100000001b3ULL;
  return h;
}

std::string to_string(const GameState& s) {
  auto join = [](const std::vector<Vertex>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(vs[i]);
    }
    return out + "}";
  };
  return "(K=" + join(s.knowledgeable) + ", I=" + join(s.ignorant) + ")";
}

nlohmann::json to_json(const GameState& s) {
  return nlohmann::json{{"knowledgeable", s.knowledgeable}, {"ignorant", s.ignorant}};
}

GameState state_from_json(const nlohmann::json& j) {
  return GameState(j.at("knowledgeable").get<std::vector<Vertex>>(),
                   j.at("ignorant").get<std::vector<Vertex>>());
}

SpanningChoice::SpanningChoice(const Graph& base, std::vector<Edge> edges)
    : sub_(base.vertex_count(), std::move(edges)) {
  check_choice(base, *this);
}

SpanningChoice SpanningChoice::whole(const Graph& base) {
  if (!is_connected(base)) throw GameError("base graph is not connected");
  return SpanningChoice(base);
}

SpanningChoice SpanningChoice::unchecked(Graph subgraph) { return SpanningChoice(std::move(subgraph)); }

void check_choice(const Graph& g, const SpanningChoice& choice) {
  const Graph& sub = choice.subgraph();
  if (sub.vertex_count() != g.vertex_count()) {
    throw GameError("spanning choice has the wrong vertex count");
  }
  if (!g.contains_edges_of(sub)) throw GameError("spanning choice uses an edge outside the graph");
  if (!is_connected(sub)) throw GameError("spanning choice is not connected");
}

void check_move(const GameState& s, const SpanningChoice& choice, const MoveVector& mv) {
  auto from = s.slots();
  if (mv.size() != from.size()) throw GameError("move vector has the wrong length");
  for (std::size_t i = 0; i < from.size(); ++i) {
    Vertex to = mv[i];
    if (to < 0 || to >= choice.subgraph().vertex_count() ||
        !mask_has(choice.closed_neighborhood(from[i]), to)) {
      throw GameError("agent " + std::to_string(i) + " cannot move from " + std::to_string(from[i]) +
                      " to " + std::to_string(to));
    }
  }
}

bool is_agents_win(const GameState& s) { return s.ignorant.empty(); }

namespace {

void for_each_subset(int n, int size, VertexMask exclude,
                     const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> chosen;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    if (static_cast<int>(chosen.size()) == size) {
      visit(chosen);
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      if (mask_has(exclude, v)) continue;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<GameState> config_placements(const Graph& g, int x, int y) {
  const int n = g.vertex_count();
  if (x < 0 || y < 0 || x + y > n) throw GameError("placement needs x + y <= vertex count");
  std::vector<GameState> out;
  for_each_subset(n, y, 0, [&](const std::vector<Vertex>& ks) {
    VertexMask used = 0;
    for (Vertex v : ks) used |= bit(v);
    for_each_subset(n, x, used, [&](const std::vector<Vertex>& is) { out.emplace_back(ks, is); });
  });
  return out;
}

std::vector<GameState> initial_placements(const Graph& g, int k) {
  if (k < 1 || k > g.vertex_count()) throw GameError("k must lie in 1..vertex count");
  return config_placements(g, k - 1, 1);
}

GameState resolve_moves(const GameState& s, const MoveVector& mv) {
  const std::size_t nk = s.knowledgeable.size();
  VertexMask informed = 0;
  std::vector<Vertex> k(mv.begin(), mv.begin() + static_cast<std::ptrdiff_t>(nk));
  for (Vertex v : k) informed |= bit(v);
  std::vector<Vertex> i;
  for (std::size_t slot = nk; slot < mv.size(); ++slot) {
    if (mask_has(informed, mv[slot])) {
      k.push_back(mv[slot]);
    } else {
      i.push_back(mv[slot]);
    }
  }
  return GameState(std::move(k), std::move(i));
}

GameState apply_moves(const Graph& g, const GameState& s, const SpanningChoice& choice,
                      const MoveVector& mv) {
  check_choice(g, choice);
  check_move(s, choice, mv);
  return resolve_moves(s, mv);
}

void for_each_move(const GameState& s, const SpanningChoice& choice,
                   const std::function<bool(const MoveVector&)>& visit) {
  const auto from = s.slots();
  const std::size_t nk = s.knowledgeable.size();
  const std::size_t slots = from.size();
  std::vector<std::vector<Vertex>> options(slots);
  // Agents identical to their predecessor slot pick nondecreasing options.
  std::vector<bool> same_as_prev(slots, false);
  for (std::size_t i = 0; i < slots; ++i) {
    options[i] = mask_to_vertices(choice.closed_neighborhood(from[i]));
    same_as_prev[i] = i > 0 && i != nk && from[i] == from[i - 1];
  }
  MoveVector mv(slots);
  std::vector<std::size_t> pick(slots, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == slots) {
      if (!visit(mv)) stop = true;
      return;
    }
    std::size_t first = same_as_prev[i] ? pick[i - 1] : 0;
    for (std::size_t o = first; o < options[i].size() && !stop; ++o) {
      pick[i] = o;
      mv[i] = options[i][o];
      rec(i + 1);
    }
  };
  rec(0);
}

std::vector<GameState> agent_move_options(const Graph& g, const GameState& s,
                                          const SpanningChoice& choice) {
  check_choice(g, choice);
  std::set<GameState> seen;
  for_each_move(s, choice, [&](const MoveVector& mv) {
    seen.insert(resolve_moves(s, mv));
    return true;
  });
  return {seen.begin(), seen.end()};
}

PlayResult play(const Graph& g, const GameState& s0, AdversaryStrategy& adv, AgentsStrategy& ag,
                int cap) {
  if (cap < 0) throw GameError("round cap must be non-negative");
  PlayResult result{outcome::RoundCapReached{cap}, {}};
  GameState state = s0;
  Phase pa = adv.initial_phase(s0);
  Phase pg = ag.initial_phase(s0);
  std::map<std::tuple<GameState, Phase, Phase>, int> first_seen;
  for (int round = 0;; ++round) {
    if (is_agents_win(state)) {
      result.outcome = outcome::AgentsWinAt{round};
      return result;
    }
    auto [it, fresh] = first_seen.emplace(std::make_tuple(state, pa, pg), round);
    if (!fresh) {
      result.outcome = outcome::CycleDetected{round, round - it->second};
      return result;
    }
    if (round == cap) return result;

    SpanningChoice choice = adv.choose(state, pa);
    check_choice(g, choice);
    MoveVector mv = ag.move(state, choice, pg);
    check_move(state, choice, mv);
    GameState after = resolve_moves(state, mv);
    result.trace.push_back(RoundRecord{round + 1, choice.edges(), state, after});
    pa = adv.advance(pa, state, choice, after);
    pg = ag.advance(pg, state, choice, after);
    state = std::move(after);
  }
}

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (Edge e : edges) out.push_back({e.u, e.v});
  return out;
}

nlohmann::json to_json(const PlayOutcome& o) {
  struct Visitor {
    nlohmann::json operator()(const outcome::AgentsWinAt& w) const {
      return {{"outcome", "AgentsWinAt"}, {"round", w.round}};
    }
    nlohmann::json operator()(const outcome::CycleDetected& c) const {
      return {{"outcome", "CycleDetected"},
              {"first_repeat_round", c.first_repeat_round},
              {"period", c.period}};
    }
    nlohmann::json operator()(const outcome::RoundCapReached& r) const {
      return {{"outcome", "RoundCapReached"}, {"cap", r.cap}};
    }
  };
  return std::visit(Visitor{}, o);
}

nlohmann::json to_json(const RoundRecord& r) {
  return {{"round", r.round},
          {"subgraph_edges", edges_to_json(r.subgraph_edges)},
          {"positions_before", to_json(r.before)},
          {"positions_after", to_json(r.after)},
          {"knowledgeable_count", r.after.knowledgeable.size()}};
}

nlohmann::json trace_to_json(const std::vector<RoundRecord>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : trace) out.push_back(to_json(r));
  return out;
}

}  // namespace broadcast
