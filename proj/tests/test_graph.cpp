#include <gtest/gtest.h>

#include <random>
#include <set>

#include "broadcast/algorithms.hpp"
#include "broadcast/families.hpp"
#include "broadcast/graph.hpp"
#include "broadcast/isomorphism.hpp"
#include "oracle.hpp"

using namespace broadcast;

namespace {

Graph random_connected(std::mt19937& rng, int n, double p) {
  for (;;) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(rng)) edges.push_back({a, b});
    if (oracle::connected(n, edges)) return Graph(n, edges);
  }
}

}  // namespace

TEST(Graph, NormalizesAndMergesEdges) {
  Graph g(4, {{2, 1}, {1, 2}, {3, 0}});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges()[0], (Edge{0, 3}));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.edge_index(Edge{1, 2}), 1);
  EXPECT_EQ(g.edge_index(Edge{0, 1}), -1);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(make_edge(2, 2), GraphError);
}

TEST(EdgeList, ParsesCommentsAndRoundTrips) {
  Graph g = parse_edge_list("# triangle\n0 1\n\n1 2  # tail\n2 0\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3U);
  Graph h(6, {{0, 1}, {1, 2}});
  Graph back = parse_edge_list(format_edge_list(h));
  EXPECT_EQ(back, h);
  EXPECT_THROW(parse_edge_list("0 x\n"), GraphError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), GraphError);
}

TEST(Algorithms, ConnectivityMatchesUnionFind) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 8;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.3);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(rng)) edges.push_back({a, b});
    Graph g(n, edges);
    EXPECT_EQ(is_connected(g), oracle::connected(n, edges));
    EXPECT_EQ(is_tree(g), oracle::connected(n, edges) && static_cast<int>(edges.size()) == n - 1);
  }
}

TEST(Algorithms, BridgesAndCutVerticesMatchRemoval) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_connected(rng, 2 + trial % 7, 0.35);
    std::set<Edge> want;
    for (const Edge& e : g.edges()) {
      std::vector<Edge> rest;
      for (const Edge& f : g.edges())
        if (f != e) rest.push_back(f);
      if (!oracle::connected(g.vertex_count(), rest)) want.insert(e);
    }
    auto got = bridges(g);
    EXPECT_EQ(std::set<Edge>(got.begin(), got.end()), want);

    VertexMask cuts = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (components_without(g, bit(v)).size() > 1) cuts |= bit(v);
    }
    EXPECT_EQ(cut_vertices(g), cuts);
  }
}

TEST(Algorithms, DistancesMatchFloyd) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected(rng, 2 + trial % 9, 0.3);
    auto want = oracle::floyd(g);
    DistanceMatrix d = all_pairs_distances(g);
    int diam = 0;
    for (Vertex a = 0; a < g.vertex_count(); ++a)
      for (Vertex b = 0; b < g.vertex_count(); ++b) {
        EXPECT_EQ(d(a, b), want[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        diam = std::max(diam, d(a, b));
      }
    EXPECT_EQ(diameter(g), diam);
  }
  EXPECT_THROW(all_pairs_distances(Graph(3, {{0, 1}})), GraphError);
}

TEST(Algorithms, SpanningEnumerationsMatchSubsetFilter) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected(rng, 2 + trial % 6, 0.5);
    if (g.edge_count() > 14) continue;
    auto want_trees = oracle::spanning_trees(g);
    std::set<std::vector<Edge>> got_trees;
    for (const Graph& t : spanning_trees(g)) {
      EXPECT_TRUE(is_tree(t));
      got_trees.insert(t.edges());
    }
    EXPECT_EQ(got_trees, std::set<std::vector<Edge>>(want_trees.begin(), want_trees.end()));

    auto want_conn = oracle::connected_spanning(g);
    std::set<std::vector<Edge>> got_conn;
    for (const Graph& c : connected_spanning_subgraphs(g)) got_conn.insert(c.edges());
    EXPECT_EQ(got_conn, std::set<std::vector<Edge>>(want_conn.begin(), want_conn.end()));
  }
}

TEST(Algorithms, SpanningTreeCountsMatchCayley) {
  // n^(n-2) labeled trees on K_n.
  EXPECT_EQ(spanning_trees(complete_graph(5)).size(), 125U);
  EXPECT_EQ(spanning_trees(complete_graph(6)).size(), 1296U);
  EXPECT_EQ(spanning_trees(cycle_graph(7)).size(), 7U);
  EXPECT_THROW(spanning_trees(complete_graph(7), 100), BudgetExceeded);
}

TEST(Algorithms, BruteForceCycleQueries) {
  EXPECT_EQ(clique_number(complete_graph(5)), 5);
  EXPECT_EQ(clique_number(cycle_graph(5)), 2);
  EXPECT_EQ(circumference(path_graph(4)), 0);
  EXPECT_EQ(circumference(theta_graph({3, 3, 3})), 6);
  EXPECT_TRUE(is_hamiltonian(cycle_graph(6)));
  EXPECT_FALSE(is_hamiltonian(theta_graph({3, 3, 3})));
  auto cyc = hamiltonian_cycle(grid_graph(2, 3));
  ASSERT_TRUE(cyc.has_value());
  EXPECT_EQ(cyc->size(), 6U);
  Graph grid = grid_graph(2, 3);
  for (std::size_t i = 0; i < cyc->size(); ++i) {
    EXPECT_TRUE(grid.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
  }
  EXPECT_THROW(circumference(path_graph(13)), BudgetExceeded);
}

TEST(Isomorphism, ClassCountsMatchKnownSequences) {
  // Connected graphs and trees on n unlabeled vertices.
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(connected_graph_classes(n).size(), connected[static_cast<std::size_t>(n - 1)]) << n;
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(tree_classes(n).size(), trees[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Isomorphism, CanonicalFormIsLabelInvariant) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected(rng, 3 + trial % 6, 0.4);
    std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(are_isomorphic(g, h));
  }
  EXPECT_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Subgraphs, InducedAndSpanning) {
  Graph g = complete_graph(5);
  Graph h = induced_subgraph(g, {4, 1, 2});
  EXPECT_EQ(h.vertex_count(), 3);
  EXPECT_EQ(h.edge_count(), 3U);
  Graph s = spanning_subgraph(g, {{0, 1}, {1, 2}});
  EXPECT_EQ(s.vertex_count(), 5);
  EXPECT_THROW(spanning_subgraph(path_graph(3), {{0, 2}}), GraphError);
}
