#pragma once

#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

/// Result bookkeeping of a bridge contraction.
struct ContractionMap {
  int source_vertex_count = 0;
  int target_vertex_count = 0;
  /// to_target[old vertex] = new vertex.
  std::vector<Vertex> to_target;
  /// Contracted edges, in source labels.
  std::vector<Edge> contracted;

  /// Old vertices that collapse onto `target`, ascending.
  std::vector<Vertex> preimage(Vertex target) const;
  bool is_contracted(Edge source_edge) const;
};

struct Contraction {
  Graph graph;
  ContractionMap map;
};

/// Contracts each edge in `subset`; every one must be a bridge of g.
/// New vertices are numbered by the smallest old vertex they absorb.
Contraction contract_bridges(const Graph& g, const std::vector<Edge>& subset);
Contraction contract_all_bridges(const Graph& g);

/// Checks both ContractionMap invariants against (source, target).
bool is_valid_contraction(const Graph& source, const Graph& target, const ContractionMap& map);

/// Glues h onto g by identifying h's vertex u with g's vertex v. g keeps its
/// labels; h's remaining vertices follow in order with u skipped.
Graph vertex_sum(const Graph& g, Vertex v, const Graph& h, Vertex u);
/// Vertex of vertex_sum(g, v, h, u) that h's vertex w ended up as.
Vertex vertex_sum_image(const Graph& g, Vertex v, Vertex u, Vertex w);

/// Hangs a pendant path with lengths[v] edges on every vertex v. New
/// vertices are appended path by path.
Graph attach_paths(const Graph& g, const std::vector<int>& lengths);

}  // namespace broadcast
