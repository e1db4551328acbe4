#include "broadcast/symmetry.hpp"

#include <algorithm>
#include <functional>

#include "broadcast/algorithms.hpp"

namespace broadcast {

bool OneStepFunction::injective() const {
  VertexMask seen = 0;
  for (Vertex v : image) {
    if (mask_has(seen, v)) return false;
    seen |= bit(v);
  }
  return true;
}

std::vector<OneStepFunction> one_step_functions(const std::vector<Vertex>& s, const Graph& h) {
  std::vector<std::vector<Vertex>> options;
  for (Vertex v : s) {
    if (v < 0 || v >= h.vertex_count()) throw GraphError("one-step domain vertex out of range");
    options.push_back(mask_to_vertices(h.neighbors(v) | bit(v)));
  }
  std::vector<OneStepFunction> out;
  std::vector<std::size_t> pick(s.size(), 0);
  while (true) {
    OneStepFunction t{s, {}};
    for (std::size_t i = 0; i < s.size(); ++i) t.image.push_back(options[i][pick[i]]);
    out.push_back(std::move(t));
    std::size_t i = s.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (s.empty()) return out;
  }
}

std::optional<std::vector<Vertex>> extends_to_tree_isomorphism(const Graph& tree,
                                                               const OneStepFunction& t,
                                                               const Graph& g) {
  const int n = tree.vertex_count();
  if (g.vertex_count() != n) throw GraphError("tree and graph must share the vertex set");
  if (!t.injective()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};

  std::vector<Vertex> fixed(static_cast<std::size_t>(n), -1);
  VertexMask reserved = 0;
  for (std::size_t i = 0; i < t.domain.size(); ++i) {
    fixed[static_cast<std::size_t>(t.domain[i])] = t.image[i];
    reserved |= bit(t.image[i]);
  }

  // BFS order so every vertex after the root has its parent placed.
  Vertex root = t.domain.empty() ? 0 : t.domain.front();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  VertexMask seen = bit(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : tree.neighbor_list(order[i])) {
      if (mask_has(seen, w)) continue;
      seen |= bit(w);
      parent[static_cast<std::size_t>(w)] = order[i];
      order.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw GraphError("extension needs a spanning tree");

  std::vector<Vertex> phi(static_cast<std::size_t>(n), -1);
  VertexMask used = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == order.size()) return true;
    Vertex u = order[i];
    VertexMask candidates;
    if (fixed[static_cast<std::size_t>(u)] >= 0) {
      candidates = bit(fixed[static_cast<std::size_t>(u)]);
    } else {
      candidates = ~reserved & g.all_vertices();
    }
    if (i > 0) candidates &= g.neighbors(phi[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])]);
    candidates &= ~used;
    for (Vertex c : mask_to_vertices(candidates)) {
      phi[static_cast<std::size_t>(u)] = c;
      used |= bit(c);
      if (place(i + 1)) return true;
      used &= ~bit(c);
    }
    phi[static_cast<std::size_t>(u)] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

const StsEntry* StsWitness::find(const std::vector<Vertex>& positions) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), positions,
                             [](const StsEntry& e, const std::vector<Vertex>& p) { return e.positions < p; });
  if (it == entries.end() || it->positions != positions) return nullptr;
  return &*it;
}

namespace {

std::vector<std::vector<Vertex>> k_subsets(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Every one-step function is injective iff the positions are pairwise at
// least three apart in the tree.
bool spread_out(const DistanceMatrix& d, const std::vector<Vertex>& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (d(s[a], s[b]) < 3) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<StsWitness> has_k_sts(const Graph& g, int k, std::size_t max_trees) {
  if (k < 1 || k > g.vertex_count()) throw GraphError("k must lie in 1..vertex count");
  std::vector<Graph> trees = spanning_trees(g, max_trees);
  std::vector<DistanceMatrix> tree_dist;
  tree_dist.reserve(trees.size());
  for (const auto& t : trees) tree_dist.push_back(bfs_distances(t));

  StsWitness w{g, k, {}};
  for (const auto& s : k_subsets(g.vertex_count(), k)) {
    bool found = false;
    for (std::size_t ti = 0; ti < trees.size() && !found; ++ti) {
      if (!spread_out(tree_dist[ti], s)) continue;
      StsEntry entry{s, trees[ti], {}};
      bool all = true;
      for (const auto& t : one_step_functions(s, trees[ti])) {
        auto phi = extends_to_tree_isomorphism(trees[ti], t, g);
        if (!phi) {
          all = false;
          break;
        }
        entry.extensions.emplace(t.image, std::move(*phi));
      }
      if (all) {
        w.entries.push_back(std::move(entry));
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

bool validate_witness(const StsWitness& w, std::string* error) {
  auto fail = [&](const std::string& why) {
    if (error) *error = why;
    return false;
  };
  const Graph& g = w.graph;
  const int n = g.vertex_count();
  auto sets = k_subsets(n, w.k);
  if (w.entries.size() != sets.size()) return fail("witness does not cover every position set");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const StsEntry& e = w.entries[i];
    if (e.positions != sets[i]) return fail("entries are not in lexicographic order");
    if (e.tree.vertex_count() != n || !g.contains_edges_of(e.tree) || !is_tree(e.tree)) {
      return fail("stored tree is not a spanning tree");
    }
    for (const auto& t : one_step_functions(e.positions, e.tree)) {
      if (!t.injective()) return fail("a one-step function merges two agents");
      auto it = e.extensions.find(t.image);
      if (it == e.extensions.end()) return fail("missing extension for a one-step function");
      const auto& phi = it->second;
      if (phi.size() != static_cast<std::size_t>(n)) return fail("extension has the wrong size");
      VertexMask used = 0;
      for (Vertex v : phi) {
        if (v < 0 || v >= n || mask_has(used, v)) return fail("extension is not injective");
        used |= bit(v);
      }
      for (std::size_t j = 0; j < t.domain.size(); ++j) {
        if (phi[static_cast<std::size_t>(t.domain[j])] != t.image[j]) {
          return fail("extension disagrees with the one-step function");
        }
      }
      for (Edge e2 : e.tree.edges()) {
        if (!g.has_edge(phi[static_cast<std::size_t>(e2.u)], phi[static_cast<std::size_t>(e2.v)])) {
          return fail("extension maps a tree edge outside the graph");
        }
      }
    }
  }
  return true;
}

namespace {

nlohmann::json edge_list_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (Edge e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const nlohmann::json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back(make_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()));
  return out;
}

}  // namespace

nlohmann::json to_json(const StsWitness& w) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : w.entries) {
    nlohmann::json ext = nlohmann::json::array();
    for (const auto& [image, phi] : e.extensions) ext.push_back({{"image", image}, {"map", phi}});
    entries.push_back({{"positions", e.positions}, {"tree_edges", edge_list_json(e.tree.edges())}, {"extensions", ext}});
  }
  return {{"vertex_count", w.graph.vertex_count()},
          {"edges", edge_list_json(w.graph.edges())},
          {"k", w.k},
          {"entries", entries}};
}

StsWitness witness_from_json(const nlohmann::json& j) {
  StsWitness w;
  const int n = j.at("vertex_count").get<int>();
  w.graph = Graph(n, edges_from_json(j.at("edges")));
  w.k = j.at("k").get<int>();
  for (const auto& je : j.at("entries")) {
    StsEntry e;
    e.positions = je.at("positions").get<std::vector<Vertex>>();
    e.tree = Graph(n, edges_from_json(je.at("tree_edges")));
    for (const auto& x : je.at("extensions")) {
      e.extensions.emplace(x.at("image").get<std::vector<Vertex>>(), x.at("map").get<std::vector<Vertex>>());
    }
    w.entries.push_back(std::move(e));
  }
  return w;
}

}  // namespace broadcast
