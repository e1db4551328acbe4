#include "broadcast/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "broadcast/algorithms.hpp"

namespace broadcast {

std::vector<Vertex> ContractionMap::preimage(Vertex target) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < source_vertex_count; ++v) {
    if (to_target[static_cast<std::size_t>(v)] == target) out.push_back(v);
  }
  return out;
}

bool ContractionMap::is_contracted(Edge source_edge) const {
  return std::binary_search(contracted.begin(), contracted.end(), source_edge);
}

Contraction contract_bridges(const Graph& g, const std::vector<Edge>& subset) {
  const int n = g.vertex_count();
  std::vector<Edge> all_bridges = bridges(g);
  std::vector<Edge> chosen;
  for (Edge e : subset) {
    Edge norm = make_edge(e.u, e.v);
    if (!std::binary_search(all_bridges.begin(), all_bridges.end(), norm)) {
      throw GraphError("edge (" + std::to_string(norm.u) + "," + std::to_string(norm.v) +
                       ") is not a bridge");
    }
    chosen.push_back(norm);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (Edge e : chosen) {
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }

  ContractionMap map;
  map.source_vertex_count = n;
  map.contracted = chosen;
  map.to_target.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> root_label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find(v);
    if (root_label[static_cast<std::size_t>(r)] < 0) root_label[static_cast<std::size_t>(r)] = next++;
    map.to_target[static_cast<std::size_t>(v)] = root_label[static_cast<std::size_t>(r)];
  }
  map.target_vertex_count = next;

  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (map.is_contracted(e)) continue;
    edges.push_back(make_edge(map.to_target[static_cast<std::size_t>(e.u)],
                              map.to_target[static_cast<std::size_t>(e.v)]));
  }
  return Contraction{Graph(next, std::move(edges)), std::move(map)};
}

Contraction contract_all_bridges(const Graph& g) { return contract_bridges(g, bridges(g)); }

bool is_valid_contraction(const Graph& source, const Graph& target, const ContractionMap& map) {
  if (map.source_vertex_count != source.vertex_count() ||
      map.target_vertex_count != target.vertex_count() ||
      map.to_target.size() != static_cast<std::size_t>(source.vertex_count())) {
    return false;
  }
  if (!is_connected(source)) return false;
  auto b = bridges(source);
  for (Edge e : map.contracted) {
    if (!std::binary_search(b.begin(), b.end(), e)) return false;
    if (map.to_target[static_cast<std::size_t>(e.u)] != map.to_target[static_cast<std::size_t>(e.v)]) {
      return false;
    }
  }
  std::vector<Edge> image;
  for (Edge e : source.edges()) {
    if (map.is_contracted(e)) continue;
    Vertex a = map.to_target[static_cast<std::size_t>(e.u)];
    Vertex c = map.to_target[static_cast<std::size_t>(e.v)];
    if (a == c) return false;
    image.push_back(make_edge(a, c));
  }
  std::sort(image.begin(), image.end());
  return image == target.edges();
}

Vertex vertex_sum_image(const Graph& g, Vertex v, Vertex u, Vertex w) {
  if (w == u) return v;
  return g.vertex_count() + (w < u ? w : w - 1);
}

Graph vertex_sum(const Graph& g, Vertex v, const Graph& h, Vertex u) {
  if (v < 0 || v >= g.vertex_count() || u < 0 || u >= h.vertex_count()) {
    throw GraphError("vertex_sum: vertex out of range");
  }
  const int n = g.vertex_count() + h.vertex_count() - 1;
  if (n > Graph::kMaxVertices) throw GraphError("vertex_sum: result exceeds the vertex limit");
  std::vector<Edge> edges = g.edges();
  for (Edge e : h.edges()) {
    edges.push_back(make_edge(vertex_sum_image(g, v, u, e.u), vertex_sum_image(g, v, u, e.v)));
  }
  return Graph(n, std::move(edges));
}

Graph attach_paths(const Graph& g, const std::vector<int>& lengths) {
  if (lengths.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw GraphError("attach_paths: need one length per vertex");
  }
  int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int len = lengths[static_cast<std::size_t>(v)];
    if (len < 0) throw GraphError("attach_paths: negative length");
    Vertex prev = v;
    for (int i = 0; i < len; ++i) {
      edges.push_back(Edge{prev, n});
      prev = n++;
    }
  }
  if (n > Graph::kMaxVertices) throw GraphError("attach_paths: result exceeds the vertex limit");
  return Graph(n, std::move(edges));
}

}  // namespace broadcast
