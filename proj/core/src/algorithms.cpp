#include "broadcast/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace broadcast {

namespace {

VertexMask reach_from(const std::vector<VertexMask>& adj, Vertex start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexMask> adjacency_of(const Graph& g) {
  std::vector<VertexMask> adj(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  return adj;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + " requires a connected graph");
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return reach_from(adjacency_of(g), 0, g.all_vertices()) == g.all_vertices();
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && static_cast<int>(g.edge_count()) == g.vertex_count() - 1 &&
         is_connected(g);
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || static_cast<int>(g.edge_count()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

std::vector<VertexMask> components_without(const Graph& g, VertexMask removed) {
  auto adj = adjacency_of(g);
  VertexMask remaining = g.all_vertices() & ~removed;
  std::vector<VertexMask> out;
  while (remaining != 0) {
    Vertex s = std::countr_zero(remaining);
    VertexMask comp = reach_from(adj, s, remaining);
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Graph& g) { return components_without(g, 0); }

namespace {

struct LowLink {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  int timer = 0;
  VertexMask cut = 0;
  std::vector<Edge> bridge_list;

  explicit LowLink(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.vertex_count()), -1),
        low(static_cast<std::size_t>(graph.vertex_count()), 0) {}

  void dfs(Vertex v, Vertex parent) {
    auto vi = static_cast<std::size_t>(v);
    disc[vi] = low[vi] = timer++;
    int children = 0;
    for (Vertex w : g.neighbor_list(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (w == parent) continue;
      if (disc[wi] >= 0) {
        low[vi] = std::min(low[vi], disc[wi]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[vi] = std::min(low[vi], low[wi]);
      if (parent >= 0 && low[wi] >= disc[vi]) cut |= bit(v);
      if (low[wi] > disc[vi]) bridge_list.push_back(make_edge(v, w));
    }
    if (parent < 0 && children > 1) cut |= bit(v);
  }
};

}  // namespace

VertexMask cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  if (g.vertex_count() == 0) return 0;
  LowLink ll(g);
  ll.dfs(0, -1);
  return ll.cut;
}

std::vector<Edge> bridges(const Graph& g) {
  require_connected(g, "bridges");
  if (g.vertex_count() == 0) return {};
  LowLink ll(g);
  ll.dfs(0, -1);
  std::sort(ll.bridge_list.begin(), ll.bridge_list.end());
  return ll.bridge_list;
}

DistanceMatrix bfs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    d.at(s, s) = 0;
    VertexMask seen = bit(s);
    VertexMask frontier = seen;
    int depth = 0;
    while (frontier != 0) {
      ++depth;
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      next &= ~seen;
      for (VertexMask f = next; f != 0; f &= f - 1) d.at(s, std::countr_zero(f)) = depth;
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  require_connected(g, "all_pairs_distances");
  return bfs_distances(g);
}

int diameter(const Graph& g) {
  auto d = all_pairs_distances(g);
  int best = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = 0; b < g.vertex_count(); ++b) best = std::max(best, d(a, b));
  }
  return best;
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex from, Vertex to) {
  const int n = tree.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{to};
  parent[static_cast<std::size_t>(to)] = to;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : tree.neighbor_list(v)) {
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[static_cast<std::size_t>(from)] < 0) {
    throw GraphError("tree_path: vertices are not connected");
  }
  std::vector<Vertex> path{from};
  while (path.back() != to) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  return path;
}

namespace {

// Include/exclude recursion over the edge list. An edge may be excluded only
// while the remaining available edges still connect the graph, so every
// leaf of the recursion is a valid output.
class SubgraphEnumerator {
 public:
  SubgraphEnumerator(const Graph& g, bool trees_only,
                     const std::function<bool(const Graph&)>& visit)
      : g_(g), trees_only_(trees_only), visit_(visit), avail_(adjacency_of(g)) {
    parent_.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t run() {
    if (!is_connected(g_)) throw GraphError("spanning enumeration requires a connected graph");
    recurse(0);
    return count_;
  }

 private:
  Vertex find(Vertex v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }

  bool still_connected() const {
    if (g_.vertex_count() <= 1) return true;
    return reach_from(avail_, 0, g_.all_vertices()) == g_.all_vertices();
  }

  bool emit(std::vector<Edge> edges) {
    ++count_;
    return visit_(Graph(g_.vertex_count(), std::move(edges)));
  }

  bool recurse(std::size_t i) {
    const auto& edges = g_.edges();
    if (trees_only_ && static_cast<int>(chosen_.size()) == g_.vertex_count() - 1) {
      return emit(chosen_);
    }
    if (trees_only_ && g_.vertex_count() <= 1) return emit({});
    if (i == edges.size()) {
      if (trees_only_) return true;
      return emit(chosen_);
    }
    const Edge e = edges[i];

    if (trees_only_) {
      Vertex ru = find(e.u);
      Vertex rv = find(e.v);
      if (ru != rv) {
        parent_[static_cast<std::size_t>(ru)] = rv;
        chosen_.push_back(e);
        bool go_on = recurse(i + 1);
        chosen_.pop_back();
        parent_[static_cast<std::size_t>(ru)] = ru;
        if (!go_on) return false;
      }
    } else {
      chosen_.push_back(e);
      bool go_on = recurse(i + 1);
      chosen_.pop_back();
      if (!go_on) return false;
    }

    avail_[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
    avail_[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
    bool go_on = true;
    if (still_connected()) go_on = recurse(i + 1);
    avail_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    avail_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    return go_on;
  }

  const Graph& g_;
  bool trees_only_;
  const std::function<bool(const Graph&)>& visit_;
  std::vector<VertexMask> avail_;
  std::vector<Vertex> parent_;
  std::vector<Edge> chosen_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_spanning_tree(const Graph& g, const std::function<bool(const Graph&)>& visit) {
  return SubgraphEnumerator(g, true, visit).run();
}

std::vector<Graph> spanning_trees(const Graph& g, std::size_t cap) {
  std::vector<Graph> out;
  for_each_spanning_tree(g, [&](const Graph& t) {
    if (out.size() >= cap) {
      throw BudgetExceeded("spanning tree count exceeds cap of " + std::to_string(cap));
    }
    out.push_back(t);
    return true;
  });
  return out;
}

std::size_t for_each_connected_spanning_subgraph(const Graph& g,
                                                 const std::function<bool(const Graph&)>& visit) {
  return SubgraphEnumerator(g, false, visit).run();
}

std::vector<Graph> connected_spanning_subgraphs(const Graph& g, std::size_t cap) {
  std::vector<Graph> out;
  for_each_connected_spanning_subgraph(g, [&](const Graph& s) {
    if (out.size() >= cap) {
      throw BudgetExceeded("connected spanning subgraph count exceeds cap of " +
                           std::to_string(cap));
    }
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

void check_cap(const Graph& g, int max_vertices, const char* what) {
  if (g.vertex_count() > max_vertices) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                         " vertices exceeds brute-force cap of " + std::to_string(max_vertices));
  }
}

void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x, int& best) {
  if (p == 0 && x == 0) {
    best = std::max(best, std::popcount(r));
    return;
  }
  if (std::popcount(r) + std::popcount(p) <= best) return;
  Vertex pivot = std::countr_zero(p | x);
  for (VertexMask cand = p & ~g.neighbors(pivot); cand != 0; cand &= cand - 1) {
    Vertex v = std::countr_zero(cand);
    bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), best);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// ends[mask] holds the set of vertices v such that a simple path from `start`
// covering exactly `mask` ends at v. Only vertices >= start are used, so each
// cycle is found once from its smallest vertex.
std::vector<VertexMask> path_table(const Graph& g, Vertex start) {
  const int n = g.vertex_count();
  const int width = n - start;
  std::vector<VertexMask> ends(std::size_t{1} << width, 0);
  auto local = [&](Vertex v) { return VertexMask{1} << (v - start); };
  ends[local(start)] = bit(start);
  for (std::size_t mask = 1; mask < ends.size(); ++mask) {
    for (VertexMask e = ends[mask]; e != 0; e &= e - 1) {
      Vertex v = std::countr_zero(e);
      for (VertexMask nb = g.neighbors(v) & ~((VertexMask{1} << start) - 1); nb != 0; nb &= nb - 1) {
        Vertex w = std::countr_zero(nb);
        if (mask & local(w)) continue;
        ends[mask | local(w)] |= bit(w);
      }
    }
  }
  return ends;
}

}  // namespace

int clique_number(const Graph& g, int max_vertices) {
  check_cap(g, max_vertices, "clique_number");
  int best = 0;
  bron_kerbosch(g, 0, g.all_vertices(), 0, best);
  return best;
}

std::vector<Vertex> longest_cycle(const Graph& g, int max_vertices) {
  check_cap(g, max_vertices, "longest_cycle");
  const int n = g.vertex_count();
  std::vector<Vertex> best;
  for (Vertex s = 0; s + 2 < n; ++s) {
    auto ends = path_table(g, s);
    auto local = [&](Vertex v) { return VertexMask{1} << (v - s); };
    std::size_t best_mask = 0;
    Vertex best_end = -1;
    for (std::size_t mask = 1; mask < ends.size(); ++mask) {
      int len = std::popcount(mask);
      if (len < 3 || len <= static_cast<int>(best.size())) continue;
      VertexMask closing = ends[mask] & g.neighbors(s);
      if (closing != 0 && len > std::popcount(best_mask)) {
        best_mask = mask;
        best_end = std::countr_zero(closing);
      }
    }
    if (best_end < 0) continue;
    std::vector<Vertex> cycle;
    std::size_t mask = best_mask;
    Vertex v = best_end;
    while (v != s) {
      cycle.push_back(v);
      std::size_t prev = mask & ~local(v);
      VertexMask cands = ends[prev] & g.neighbors(v);
      mask = prev;
      v = std::countr_zero(cands);
    }
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    best = std::move(cycle);
  }
  return best;
}

int circumference(const Graph& g, int max_vertices) {
  return static_cast<int>(longest_cycle(g, max_vertices).size());
}

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g, int max_vertices) {
  check_cap(g, max_vertices, "hamiltonian_cycle");
  if (g.vertex_count() < 3) return std::nullopt;
  auto cycle = longest_cycle(g, max_vertices);
  if (static_cast<int>(cycle.size()) != g.vertex_count()) return std::nullopt;
  return cycle;
}

bool is_hamiltonian(const Graph& g, int max_vertices) {
  return hamiltonian_cycle(g, max_vertices).has_value();
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = index[static_cast<std::size_t>(e.u)];
    int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph spanning_subgraph(const Graph& g, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    if (g.edge_index(e) < 0) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") is not in the base graph");
    }
  }
  return Graph(g.vertex_count(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back(make_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace broadcast
