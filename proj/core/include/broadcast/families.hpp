#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

namespace family {
struct Path { int n; };
struct Cycle { int n; };
struct Clique { int n; };
struct Grid { int rows; int cols; };
/// Two hubs joined by internally disjoint paths with the given edge counts.
struct Theta { std::vector<int> lengths; };
/// Complete binary tree with `depth` edge levels below the root.
struct BinaryTree { int depth; };
struct File { std::string path; };
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Clique, family::Grid,
                                family::Theta, family::BinaryTree, family::File>;

/// Parses the "family:params" mini-grammar, e.g. "cycle:5", "grid:3x4",
/// "theta:3,3,3", "bintree:3", "file:g.edges".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws GraphError on invalid parameters.
Graph generate(const FamilySpec& spec);
/// parse_family_spec followed by generate.
Graph graph_from_spec(std::string_view text);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Vertex id of (row, col) is row * cols + col.
Graph grid_graph(int rows, int cols);
/// Hub A is vertex 0, hub B is vertex 1, internal vertices numbered path by path.
Graph theta_graph(const std::vector<int>& lengths);
Graph binary_tree(int depth);
Graph star_graph(int leaves);

}  // namespace broadcast
