#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace broadcast {

using Vertex = int;
using VertexMask = std::uint64_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Builds a normalized edge; throws GraphError on a self-loop.
Edge make_edge(Vertex a, Vertex b);

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency is kept as one 64-bit neighbor mask per vertex, which caps the
/// vertex count at 64; every game-level computation is exponential long
/// before that limit matters.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int vertex_count);
  /// Duplicate edges are merged. Self-loops and out-of-range endpoints throw.
  Graph(int vertex_count, std::vector<Edge> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  VertexMask neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::vector<Vertex> neighbor_list(Vertex v) const;
  int degree(Vertex v) const;
  /// Position of the edge in edges(), or -1.
  int edge_index(Edge e) const;
  VertexMask all_vertices() const;

  bool contains_edges_of(const Graph& sub) const;

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;
  std::string label(Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
  std::vector<std::string> labels_;
};

/// Parses "u v" lines; '#' starts a comment, blank lines are ignored.
/// The vertex count is one more than the largest index mentioned.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list. A header comment records the vertex count so
/// isolated high-numbered vertices survive a round trip.
std::string format_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);

inline bool mask_has(VertexMask m, Vertex v) { return (m >> v) & 1U; }
inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

std::vector<Vertex> mask_to_vertices(VertexMask m);

}  // namespace broadcast
