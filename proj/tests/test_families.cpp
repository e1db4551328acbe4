#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "broadcast/algorithms.hpp"
#include "broadcast/constructions.hpp"
#include "broadcast/families.hpp"
#include "broadcast/isomorphism.hpp"

using namespace broadcast;

TEST(Families, Sizes) {
  EXPECT_EQ(path_graph(5).edge_count(), 4U);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5U);
  EXPECT_EQ(complete_graph(6).edge_count(), 15U);
  Graph grid = grid_graph(3, 4);
  EXPECT_EQ(grid.vertex_count(), 12);
  EXPECT_EQ(grid.edge_count(), 17U);
  EXPECT_TRUE(grid.has_edge(0, 1));
  EXPECT_TRUE(grid.has_edge(0, 4));
  EXPECT_FALSE(grid.has_edge(3, 4));
  Graph theta = theta_graph({3, 3, 3});
  EXPECT_EQ(theta.vertex_count(), 8);
  EXPECT_EQ(theta.edge_count(), 9U);
  EXPECT_EQ(theta.degree(0), 3);
  EXPECT_EQ(theta.degree(1), 3);
  Graph bt = binary_tree(3);
  EXPECT_EQ(bt.vertex_count(), 15);
  EXPECT_TRUE(is_tree(bt));
  EXPECT_EQ(diameter(bt), 6);
}

TEST(Families, ThetaEdgeCases) {
  EXPECT_TRUE(are_isomorphic(theta_graph({2, 2}), cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(theta_graph({1, 2}), cycle_graph(3)));
  EXPECT_THROW(theta_graph({1, 1}), GraphError);
  EXPECT_TRUE(are_isomorphic(theta_graph({3}), path_graph(4)));
}

TEST(Families, Rejections) {
  EXPECT_THROW(cycle_graph(2), GraphError);
  EXPECT_THROW(parse_family_spec("wheel:5"), GraphError);
  EXPECT_THROW(parse_family_spec("cycle:"), GraphError);
  EXPECT_THROW(parse_family_spec("grid:3"), GraphError);
  EXPECT_THROW(parse_family_spec("path:-1"), GraphError);
}

TEST(Families, SpecRoundTrip) {
  for (const char* text : {"path:4", "cycle:7", "clique:5", "grid:3x4", "theta:3,3,3", "bintree:2"}) {
    FamilySpec spec = parse_family_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(generate(parse_family_spec(to_string(spec))), generate(spec));
  }
  EXPECT_EQ(graph_from_spec("complete:4"), complete_graph(4));
}

TEST(Families, FileSpecRoundTrip) {
  std::string path = ::testing::TempDir() + "theta.edges";
  {
    std::ofstream out(path);
    out << format_edge_list(theta_graph({2, 3, 4}));
  }
  Graph back = graph_from_spec("file:" + path);
  EXPECT_TRUE(are_isomorphic(back, theta_graph({2, 3, 4})));
  std::remove(path.c_str());
}

TEST(Constructions, ContractBridges) {
  // Triangle 0-1-2 with pendant path 2-3-4.
  Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  Contraction c = contract_all_bridges(g);
  EXPECT_TRUE(are_isomorphic(c.graph, cycle_graph(3)));
  EXPECT_TRUE(is_valid_contraction(g, c.graph, c.map));
  EXPECT_EQ(c.map.to_target[2], c.map.to_target[4]);
  EXPECT_EQ(c.map.preimage(c.map.to_target[2]), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_TRUE(c.map.is_contracted(Edge{2, 3}));
  EXPECT_FALSE(c.map.is_contracted(Edge{0, 1}));
  EXPECT_THROW(contract_bridges(g, {Edge{0, 1}}), GraphError);
}

TEST(Constructions, ContractionPreservesNonBridgeStructure) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graph_classes(n)) {
      Contraction c = contract_all_bridges(g);
      EXPECT_TRUE(is_valid_contraction(g, c.graph, c.map));
      EXPECT_EQ(c.graph.edge_count() + c.map.contracted.size(), g.edge_count());
      EXPECT_TRUE(bridges(c.graph).empty());
      EXPECT_EQ(c.graph.vertex_count(), n - static_cast<int>(c.map.contracted.size()));
    }
  }
}

TEST(Constructions, VertexSumAndPaths) {
  Graph s = vertex_sum(cycle_graph(5), 0, path_graph(3), 0);
  EXPECT_EQ(s.vertex_count(), 7);
  EXPECT_EQ(s.edge_count(), 7U);
  EXPECT_EQ(cut_vertices(s), bit(0) | bit(vertex_sum_image(cycle_graph(5), 0, 0, 1)));
  EXPECT_EQ(vertex_sum_image(cycle_graph(5), 2, 0, 0), 2);

  Graph a = attach_paths(cycle_graph(4), {2, 0, 1, 0});
  EXPECT_EQ(a.vertex_count(), 7);
  EXPECT_EQ(bridges(a).size(), 3U);
  EXPECT_TRUE(a.has_edge(0, 4));
  EXPECT_TRUE(a.has_edge(4, 5));
  EXPECT_TRUE(a.has_edge(2, 6));
}
