#include "broadcast/bounds.hpp"

#include <algorithm>

#include "broadcast/algorithms.hpp"

namespace broadcast {

nlohmann::json to_json(const TimeBound& b) {
  return {{"kind", b.kind == BoundKind::Exact ? "Exact" : "LowerBound"},
          {"rounds", b.rounds},
          {"justification", b.justification}};
}

namespace {

int ceil_half(int v) { return (v + 1) / 2; }

// The y vertices farthest from v (ties to lower ids), farthest first.
std::vector<Vertex> farthest_set(const DistanceMatrix& d, Vertex v, int y) {
  std::vector<Vertex> others;
  for (Vertex w = 0; w < d.size(); ++w) {
    if (w != v) others.push_back(w);
  }
  std::stable_sort(others.begin(), others.end(), [&](Vertex a, Vertex b) { return d(v, a) > d(v, b); });
  others.resize(static_cast<std::size_t>(y));
  return others;
}

}  // namespace

int y_set_diameter(const Graph& g, int y) {
  if (y < 1 || y >= g.vertex_count()) throw GraphError("y must lie in 1..vertex count - 1");
  DistanceMatrix d = all_pairs_distances(g);
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    // Taking the y farthest vertices maximizes the nearest-member distance.
    best = std::max(best, d(v, farthest_set(d, v, y).back()));
  }
  return best;
}

int initial_separation(const Graph& g, const GameState& s) {
  if (s.knowledgeable.empty() || s.ignorant.empty()) {
    throw GameError("separation needs both knowledgeable and ignorant agents");
  }
  DistanceMatrix d = all_pairs_distances(g);
  int worst = 0;
  for (Vertex i : s.ignorant) {
    int nearest = d(i, s.knowledgeable.front());
    for (Vertex k : s.knowledgeable) nearest = std::min(nearest, d(i, k));
    worst = std::max(worst, nearest);
  }
  return worst;
}

TimeBound time_lower_bound(const Graph& g, const GameState& s) {
  return TimeBound{BoundKind::LowerBound, ceil_half(initial_separation(g, s)), "separation"};
}

PathTimes path_time_bounds(int n, int x, int y) {
  if (x < 1 || y < 1 || x + y > n) throw GameError("path bounds need x >= 1, y >= 1, x + y <= n");
  return PathTimes{ceil_half(n - x - y), ceil_half(n - y)};
}

int tree_two_agent_bound(const Graph& tree) {
  if (!is_tree(tree)) throw GraphError("tree bound needs a tree");
  return ceil_half(diameter(tree));
}

GameState placement_for_bound(const Graph& g, int x, int y) {
  const int n = g.vertex_count();
  if (x < 1 || y < 1 || x + y > n) throw GameError("placement needs x >= 1, y >= 1, x + y <= n");
  DistanceMatrix d = all_pairs_distances(g);
  Vertex far = 0;
  int best = -1;
  for (Vertex v = 0; v < n; ++v) {
    int r = d(v, farthest_set(d, v, y).back());
    if (r > best) {
      best = r;
      far = v;
    }
  }
  std::vector<Vertex> k = farthest_set(d, far, y);
  std::vector<Vertex> i{far};
  VertexMask used = bit(far);
  for (Vertex v : k) used |= bit(v);
  for (Vertex v = 0; v < n && static_cast<int>(i.size()) < x; ++v) {
    if (!mask_has(used, v)) i.push_back(v);
  }
  return GameState(std::move(k), std::move(i));
}

}  // namespace broadcast
