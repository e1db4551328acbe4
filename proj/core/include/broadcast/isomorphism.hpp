#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

/// Isomorphism-invariant code: relabeled adjacency rows, minimized over all
/// labelings compatible with color refinement. Equal codes iff isomorphic.
struct CanonicalForm {
  int vertex_count = 0;
  std::vector<VertexMask> rows;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Throws BudgetExceeded when refinement leaves more than `max_labelings`
/// candidate labelings.
CanonicalForm canonical_form(const Graph& g, std::uint64_t max_labelings = 5'000'000);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of connected graphs
/// on exactly n vertices (n <= 8), in canonical order.
std::vector<Graph> connected_graph_classes(int n);
/// Same, for trees on n vertices (n <= 10).
std::vector<Graph> tree_classes(int n);

/// Stable color refinement starting from degrees; colors are dense ranks.
std::vector<int> refine_colors(const Graph& g);

}  // namespace broadcast
