#include <gtest/gtest.h>

#include <random>

#include "beth/errors.hpp"
#include "beth/graph.hpp"
#include "beth/graph_io.hpp"
#include "beth/operations.hpp"
#include "oracles.hpp"

using namespace beth;

TEST(Graph6, StarIsCentredOnLastVertex) {
  const Graph g = parse_graph6("D?{");
  ASSERT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.degree(4), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(g.has_edge(v, 4));
}

TEST(Graph6, TinyGraphs) {
  EXPECT_EQ(parse_graph6("@").order(), 1);
  const Graph two = parse_graph6("A?");
  EXPECT_EQ(two.order(), 2);
  EXPECT_EQ(two.size(), 0);
  EXPECT_EQ(parse_graph6("A_").size(), 1);
  EXPECT_EQ(to_graph6(Graph::complete(6)), "E~~w");
}

TEST(Graph6, AcceptsHeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<D?{\n"), parse_graph6("D?{"));
}

TEST(Graph6, MalformedInputReportsOffset) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("E?"), ParseError);
  try {
    parse_graph6("D?{ ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.offset(), 3u);
  }
}

TEST(Graph6, RoundTripAgainstHandDecoder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    Graph g(n);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) g.add_edge(a, b);
      }
    }
    const std::string text = to_graph6(g);
    EXPECT_EQ(parse_graph6(text), g);
    EXPECT_EQ(ref::decode_graph6(text), g) << text;
  }
}

TEST(EdgeList, ParsesCommentsAndDeclaredOrder) {
  const Graph g = parse_edge_list("# tree\nn 5\n0 1\n1 2\n\n1 3\n");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.degree(4), 0);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, RejectsLoopsAndBadTokens) {
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 2\n"), ParseError);
}

TEST(Contraction, TriangleToEdge) {
  const Contraction c = contract_edge(Graph::complete(3), EdgeRef::of(0, 1));
  EXPECT_EQ(c.graph, Graph::complete(2));
  EXPECT_EQ(c.map(0), 0);
  EXPECT_EQ(c.map(1), 0);
  EXPECT_EQ(c.map(2), 1);
}

TEST(Contraction, SquareDiagonalGivesPath) {
  // Identifying opposite corners of C4 leaves a path on three vertices.
  const Contraction c = contract_nonedge(Graph::cycle(4), 0, 2);
  EXPECT_EQ(c.graph.order(), 3);
  EXPECT_EQ(c.graph.size(), 2);
  EXPECT_EQ(c.graph.degree(c.map(0)), 2);
}

TEST(Contraction, RejectsWrongAdjacency) {
  EXPECT_THROW(contract_edge(Graph::cycle(4), EdgeRef::of(0, 2)), GraphError);
  EXPECT_THROW(contract_nonedge(Graph::cycle(4), 0, 1), GraphError);
  EXPECT_THROW(contract_nonedge(Graph::cycle(4), 0, 0), GraphError);
}

TEST(Contraction, MatchesPlainMerge) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(3 + static_cast<int>(rng() % 6), 0.5, rng());
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const Graph h = g.has_edge(u, v) ? contract_edge(g, EdgeRef::of(u, v)).graph : contract_nonedge(g, u, v).graph;
        EXPECT_EQ(h, ref::merge(g, u, v));
      }
    }
  }
}

TEST(Cone, SquareBecomesWheel) {
  const Cone c = cone(Graph::cycle(4));
  EXPECT_EQ(c.apex, 4);
  EXPECT_EQ(c.graph, ref::wheel(4));
}

TEST(Subdivision, TriangleToSquare) {
  const Graph g = subdivide_edge(Graph::complete(3), EdgeRef::of(0, 1), 2);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_THROW(subdivide_edge(Graph::complete(3), EdgeRef::of(0, 1), 1), GraphError);
}

TEST(CliqueSum, TwoTrianglesMakeDiamond) {
  const Graph g = clique_sum(Graph::complete(3), Graph::complete(3), {{0, 0}, {1, 1}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 5);
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_THROW(clique_sum(Graph::path(3), Graph::complete(3), {{0, 0}, {2, 1}}), GraphError);
}

TEST(Hajos, TwoTrianglesMakePentagon) {
  const Graph g = hajos_merge(Graph::complete(3), Graph::complete(3), 0, 1, 0, 1);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(is_connected(g));
}

TEST(Operations, DeleteAndCutEdges) {
  const Graph p = Graph::path(4);
  EXPECT_TRUE(is_cut_edge(p, EdgeRef::of(1, 2)));
  EXPECT_FALSE(is_cut_edge(Graph::cycle(4), EdgeRef::of(1, 2)));
  EXPECT_FALSE(is_connected(delete_edge(p, EdgeRef::of(1, 2))));
  EXPECT_EQ(components(delete_edge(p, EdgeRef::of(1, 2))).size(), 2u);
}

TEST(Operations, DistanceTwoPairExistsWhenNotComplete) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 8), 0.4, rng());
    const auto pair = find_distance_two_pair(g);
    if (g.is_complete()) {
      EXPECT_FALSE(pair.has_value());
      continue;
    }
    ASSERT_TRUE(pair.has_value());
    const auto [u, v] = *pair;
    EXPECT_FALSE(g.has_edge(u, v));
    EXPECT_NE(g.neighbors(u) & g.neighbors(v), 0u);
  }
}

TEST(Operations, RandomGraphIsDeterministicAndConnected) {
  EXPECT_EQ(random_connected_graph(9, 0.3, 42), random_connected_graph(9, 0.3, 42));
  EXPECT_TRUE(is_connected(random_connected_graph(9, 0.3, 42)));
  EXPECT_EQ(random_connected_graph(6, 1.0, 1), Graph::complete(6));
}

TEST(Operations, InducedSubgraphKeepsOrigins) {
  const InducedSubgraph s = induced_subgraph(ref::petersen(), make_set({0, 1, 2, 3, 4}));
  EXPECT_EQ(s.graph, Graph::cycle(5));
  EXPECT_EQ(s.origin, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}
