#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

/// Raised when an enumeration or brute-force query would exceed its cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle_graph(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexMask> components(const Graph& g);
std::vector<VertexMask> components_without(const Graph& g, VertexMask removed);

/// Articulation vertices (Tarjan low-link). Requires a connected graph.
VertexMask cut_vertices(const Graph& g);
/// Bridges in edge order. Requires a connected graph.
std::vector<Edge> bridges(const Graph& g);

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n * n), -1) {}
  int operator()(Vertex a, Vertex b) const { return d_[static_cast<std::size_t>(a * n_ + b)]; }
  int& at(Vertex a, Vertex b) { return d_[static_cast<std::size_t>(a * n_ + b)]; }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<int> d_;
};

/// BFS hop distances; entries are -1 between different components.
DistanceMatrix bfs_distances(const Graph& g);
/// Hop distances of a connected graph; throws GraphError otherwise.
DistanceMatrix all_pairs_distances(const Graph& g);
int diameter(const Graph& g);

/// Unique path between two vertices of a tree (inclusive of both ends).
std::vector<Vertex> tree_path(const Graph& tree, Vertex from, Vertex to);

/// Visits every spanning tree exactly once, as a subgraph on the same vertex
/// set. The visitor returns false to stop early. Returns the number visited.
std::size_t for_each_spanning_tree(const Graph& g, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> spanning_trees(const Graph& g, std::size_t cap = 50'000);

/// Visits every connected spanning subgraph (edge subset) exactly once.
std::size_t for_each_connected_spanning_subgraph(const Graph& g,
                                                 const std::function<bool(const Graph&)>& visit);
std::vector<Graph> connected_spanning_subgraphs(const Graph& g, std::size_t cap = 1'000'000);

/// Brute-force queries; they throw BudgetExceeded above `max_vertices`.
inline constexpr int kBruteForceVertexCap = 12;
int clique_number(const Graph& g, int max_vertices = kBruteForceVertexCap);
int circumference(const Graph& g, int max_vertices = kBruteForceVertexCap);
/// A longest cycle as a vertex sequence (empty when acyclic).
std::vector<Vertex> longest_cycle(const Graph& g, int max_vertices = kBruteForceVertexCap);
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g,
                                                     int max_vertices = kBruteForceVertexCap);
bool is_hamiltonian(const Graph& g, int max_vertices = kBruteForceVertexCap);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
/// Subgraph of g on all of its vertices keeping only `edges`.
Graph spanning_subgraph(const Graph& g, std::vector<Edge> edges);
/// Applies a vertex relabeling old -> perm[old].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace broadcast
