#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "broadcast/graph.hpp"

namespace broadcast {

/// t(domain[i]) = image[i], each image equal to its source or adjacent to it.
struct OneStepFunction {
  std::vector<Vertex> domain;
  std::vector<Vertex> image;

  bool injective() const;
};

/// Every one-step function on S with respect to h, odometer order.
std::vector<OneStepFunction> one_step_functions(const std::vector<Vertex>& s, const Graph& h);

/// An injective vertex map phi extending t that sends every edge of `tree`
/// to an edge of g, or nullopt.
std::optional<std::vector<Vertex>> extends_to_tree_isomorphism(const Graph& tree,
                                                               const OneStepFunction& t,
                                                               const Graph& g);

struct StsEntry {
  std::vector<Vertex> positions;  // sorted, distinct
  Graph tree;
  /// image of t (in positions order) -> phi
  std::map<std::vector<Vertex>, std::vector<Vertex>> extensions;
};

struct StsWitness {
  Graph graph;
  int k = 0;
  std::vector<StsEntry> entries;  // one per k-set, lexicographic

  const StsEntry* find(const std::vector<Vertex>& positions) const;
};

/// Searches a k-spanning-tree-symmetry witness: for every k-set S a spanning
/// tree whose every one-step function extends. Throws BudgetExceeded when g
/// has more than `max_trees` spanning trees.
std::optional<StsWitness> has_k_sts(const Graph& g, int k, std::size_t max_trees = 50'000);

/// Re-checks every stored tree and map; on failure explains why in `error`.
bool validate_witness(const StsWitness& w, std::string* error = nullptr);

nlohmann::json to_json(const StsWitness& w);
StsWitness witness_from_json(const nlohmann::json& j);

}  // namespace broadcast
