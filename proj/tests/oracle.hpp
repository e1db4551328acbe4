#pragma once

// Naive reference implementations used as test oracles. Nothing here calls
// into the library beyond the Graph container itself.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "broadcast/graph.hpp"

namespace oracle {

using broadcast::Edge;
using broadcast::Graph;
using broadcast::Vertex;

inline bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int parts = n;
  for (const Edge& e : edges) {
    int a = find(e.u);
    int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --parts;
    }
  }
  return parts <= 1;
}

// Every edge subset, filtered by a predicate on the subset.
template <class Pred>
std::vector<std::vector<Edge>> edge_subsets(const Graph& g, Pred keep) {
  const auto& all = g.edges();
  std::vector<std::vector<Edge>> out;
  for (unsigned long mask = 0; mask < (1UL << all.size()); ++mask) {
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1UL) sub.push_back(all[i]);
    }
    if (keep(sub)) out.push_back(sub);
  }
  return out;
}

inline std::vector<std::vector<Edge>> spanning_trees(const Graph& g) {
  const int n = g.vertex_count();
  return edge_subsets(g, [&](const std::vector<Edge>& s) {
    return static_cast<int>(s.size()) == n - 1 && connected(n, s);
  });
}

inline std::vector<std::vector<Edge>> connected_spanning(const Graph& g) {
  const int n = g.vertex_count();
  return edge_subsets(g, [&](const std::vector<Edge>& s) { return connected(n, s); });
}

inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (const Edge& e : g.edges()) {
    d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  for (std::size_t m = 0; m < d.size(); ++m)
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
  return d;
}

// State as (sorted knowledgeable, sorted ignorant).
using State = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

inline State normalize(State s) {
  std::sort(s.first.begin(), s.first.end());
  std::sort(s.second.begin(), s.second.end());
  return s;
}

// Every successor of s when the round's subgraph has edge set `sub`.
inline std::set<State> successors(int n, const State& s, const std::vector<Edge>& sub) {
  std::vector<std::vector<Vertex>> options(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) options[static_cast<std::size_t>(v)].push_back(v);
  for (const Edge& e : sub) {
    options[static_cast<std::size_t>(e.u)].push_back(e.v);
    options[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<Vertex> from = s.first;
  from.insert(from.end(), s.second.begin(), s.second.end());
  const std::size_t nk = s.first.size();
  std::set<State> out;
  std::vector<Vertex> to(from.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == from.size()) {
      State next;
      std::set<Vertex> informed(to.begin(), to.begin() + static_cast<long>(nk));
      for (std::size_t j = 0; j < from.size(); ++j) {
        if (j < nk || informed.count(to[j])) {
          next.first.push_back(to[j]);
        } else {
          next.second.push_back(to[j]);
        }
      }
      out.insert(normalize(next));
      return;
    }
    for (Vertex d : options[static_cast<std::size_t>(from[i])]) {
      to[i] = d;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Every state with k agents and at least min_k knowledgeable ones.
inline std::vector<State> universe(int n, int k, int min_k) {
  std::vector<State> out;
  auto multisets = [&](int size) {
    std::vector<std::vector<Vertex>> res;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex lo) -> void {
      if (static_cast<int>(cur.size()) == size) {
        res.push_back(cur);
        return;
      }
      for (Vertex v = lo; v < n; ++v) {
        cur.push_back(v);
        self(self, v);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return res;
  };
  for (int j = min_k; j <= k; ++j) {
    for (const auto& kk : multisets(j)) {
      for (const auto& ii : multisets(k - j)) out.push_back({kk, ii});
    }
  }
  return out;
}

// Rounds Agents need to force the goal against Adversary choosing among
// `choices`; -1 if they cannot. Plain value iteration over explicit sets.
inline std::map<State, int> ranks(int n, int k, int min_k, bool first_spread,
                                  const std::vector<std::vector<Edge>>& choices) {
  auto states = universe(n, k, min_k);
  std::map<State, int> rank;
  for (const auto& s : states) {
    bool goal = first_spread ? static_cast<int>(s.first.size()) > min_k : s.second.empty();
    rank[s] = goal ? 0 : -1;
  }
  std::map<std::pair<State, std::size_t>, std::set<State>> succ;
  for (int round = 1;; ++round) {
    std::vector<State> added;
    for (const auto& s : states) {
      if (rank[s] != -1) continue;
      bool all_choices = true;
      for (std::size_t c = 0; c < choices.size() && all_choices; ++c) {
        auto key = std::make_pair(s, c);
        auto it = succ.find(key);
        if (it == succ.end()) it = succ.emplace(key, successors(n, s, choices[c])).first;
        bool some = false;
        for (const auto& t : it->second) {
          int r = rank[t];
          if (r != -1 && r < round) {
            some = true;
            break;
          }
        }
        all_choices = some;
      }
      if (all_choices) added.push_back(s);
    }
    if (added.empty()) break;
    for (const auto& s : added) rank[s] = round;
  }
  return rank;
}

}  // namespace oracle
