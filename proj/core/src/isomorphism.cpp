#include "broadcast/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "broadcast/algorithms.hpp"

namespace broadcast {

std::vector<int> refine_colors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig;
    sig.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{color[static_cast<std::size_t>(v)]};
      std::vector<int> nb;
      for (Vertex w : g.neighbor_list(v)) nb.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig.emplace_back(std::move(s), v);
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    for (const auto& [s, v] : sig) color[static_cast<std::size_t>(v)] = rank.at(s);
    if (r == classes) break;
    classes = r;
  }
  return color;
}

CanonicalForm canonical_form(const Graph& g, std::uint64_t max_labelings) {
  const int n = g.vertex_count();
  CanonicalForm best{n, {}};
  if (n == 0) return best;

  auto color = refine_colors(g);
  int max_color = *std::max_element(color.begin(), color.end());
  std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(max_color + 1));
  for (Vertex v = 0; v < n; ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);

  std::uint64_t labelings = 1;
  for (const auto& cell : cells) {
    for (std::size_t i = 2; i <= cell.size(); ++i) {
      labelings *= i;
      if (labelings > max_labelings) {
        throw BudgetExceeded("canonical_form: too many candidate labelings");
      }
    }
  }

  // order[label] = vertex; labels are assigned cell by cell.
  std::vector<Vertex> order;
  for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
  std::vector<std::size_t> cell_start;
  std::size_t pos = 0;
  for (const auto& cell : cells) {
    cell_start.push_back(pos);
    pos += cell.size();
  }

  std::vector<Vertex> label_of(static_cast<std::size_t>(n));
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  bool have_best = false;

  auto evaluate = [&] {
    for (int i = 0; i < n; ++i) label_of[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
      VertexMask row = 0;
      for (Vertex w : g.neighbor_list(order[static_cast<std::size_t>(i)])) row |= bit(label_of[static_cast<std::size_t>(w)]);
      rows[static_cast<std::size_t>(i)] = row;
    }
    if (!have_best || rows < best.rows) {
      best.rows = rows;
      have_best = true;
    }
  };

  // Odometer over the permutations of every cell; each cell starts sorted.
  while (true) {
    evaluate();
    std::size_t c = cells.size();
    bool advanced = false;
    while (c-- > 0) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(cell_start[c]);
      auto last = first + static_cast<std::ptrdiff_t>(cells[c].size());
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

Graph canonical_graph(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  std::vector<Edge> edges;
  for (int i = 0; i < cf.vertex_count; ++i) {
    for (Vertex j : mask_to_vertices(cf.rows[static_cast<std::size_t>(i)])) {
      if (i < j) edges.push_back(Edge{i, j});
    }
  }
  return Graph(cf.vertex_count, std::move(edges));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Every connected graph on n vertices arises from a connected graph on n-1
// vertices by adding a vertex: delete any non-cut vertex to go back.
std::vector<Graph> grow_classes(int n, bool trees) {
  if (n <= 0) throw GraphError("class enumeration needs n >= 1");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<CanonicalForm> seen;
    std::vector<std::pair<CanonicalForm, Graph>> next;
    for (const Graph& base : level) {
      const VertexMask limit = VertexMask{1} << (m - 1);
      for (VertexMask attach = 1; attach < limit; ++attach) {
        if (trees && (attach & (attach - 1)) != 0) continue;
        std::vector<Edge> edges = base.edges();
        for (Vertex v : mask_to_vertices(attach)) edges.push_back(Edge{v, m - 1});
        Graph candidate(m, std::move(edges));
        CanonicalForm cf = canonical_form(candidate);
        if (seen.insert(cf).second) next.emplace_back(cf, canonical_graph(candidate));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& entry : next) level.push_back(std::move(entry.second));
  }
  return level;
}

}  // namespace

std::vector<Graph> connected_graph_classes(int n) {
  if (n > 8) throw BudgetExceeded("connected_graph_classes supports n <= 8");
  return grow_classes(n, false);
}

std::vector<Graph> tree_classes(int n) {
  if (n > 10) throw BudgetExceeded("tree_classes supports n <= 10");
  return grow_classes(n, true);
}

}  // namespace broadcast
