#include <gtest/gtest.h>

#include <random>

#include "beth/characteristics.hpp"
#include "beth/cycles.hpp"
#include "beth/graph_io.hpp"
#include "beth/operations.hpp"
#include "beth/oracles.hpp"
#include "beth/solids.hpp"
#include "oracles.hpp"

using namespace beth;

namespace {

std::vector<Graph> sample(std::uint64_t seed, int count, int n_min, int n_max, double p) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
    out.push_back(random_connected_graph(n, p, rng()));
  }
  return out;
}

std::int64_t count_c(const Graph& g) { return static_cast<std::int64_t>(ref::count_induced_cycles(g)); }

}  // namespace

TEST(Property, EdgeContractionLosesTrianglesPlusOne) {
  for (const Graph& g : sample(101, 120, 2, 9, 0.5)) {
    for (const EdgeRef& e : g.edges()) {
      const Graph h = contract_edge(g, e).graph;
      EXPECT_EQ(h.order(), g.order() - 1);
      EXPECT_EQ(g.size() - h.size(), ref::triangles_through(g, e.u, e.v) + 1) << to_graph6(g);
    }
  }
}

TEST(Property, NonedgeContractionLosesCommonNeighbours) {
  for (const Graph& g : sample(102, 120, 3, 9, 0.4)) {
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (g.has_edge(u, v)) continue;
        const Graph h = contract_nonedge(g, u, v).graph;
        EXPECT_EQ(h.order(), g.order() - 1);
        EXPECT_EQ(g.size() - h.size(), popcount(g.neighbors(u) & g.neighbors(v))) << to_graph6(g);
      }
    }
  }
}

TEST(Property, EdgeContractionMonotone) {
  for (const Graph& g : sample(103, 80, 2, 8, 0.5)) {
    const auto b2 = beth2(g);
    const auto b3 = beth3(g);
    for (const EdgeRef& e : g.edges()) {
      const Graph h = contract_edge(g, e).graph;
      EXPECT_LE(beth1(h), beth1(g));
      EXPECT_LE(beth2(h), b2) << to_graph6(g);
      EXPECT_LE(beth3(h), b3) << to_graph6(g);
    }
  }
}

TEST(Property, CensusMatchesCycleLoss) {
  for (const Graph& g : sample(104, 80, 3, 8, 0.5)) {
    for (const EdgeRef& e : g.edges()) {
      const ContractionCensus c = contraction_cycle_census(g, e);
      EXPECT_EQ(c.total(), count_c(g) - count_c(contract_edge(g, e).graph)) << to_graph6(g);
      EXPECT_EQ(c.c3, ref::triangles_through(g, e.u, e.v));
      EXPECT_LE(c.largest_class, 2);
    }
  }
}

TEST(Property, ConeIdentities) {
  for (const Graph& g : sample(105, 60, 1, 7, 0.5)) {
    const Graph w = cone(g).graph;
    EXPECT_EQ(count_c(w), count_c(g) + g.size()) << to_graph6(g);
    EXPECT_EQ(enumerate_solids_bruteforce(w).size(), enumerate_solids(g).size() + count_induced_cycles(g))
        << to_graph6(g);
  }
}

TEST(Property, BoundsHoldForIndependentChi) {
  for (const Graph& g : sample(106, 80, 1, 8, 0.55)) {
    const int chi = ref::chromatic_number(g);
    EXPECT_LE(chi, max_complete_order_within(1, beth1(g)));
    EXPECT_LE(chi, max_complete_order_within(2, beth2(g))) << to_graph6(g);
    EXPECT_LE(chi, max_complete_order_within(3, beth3(g))) << to_graph6(g);
    EXPECT_GE(beth3(g), -1);
  }
}

TEST(Property, BoundsHoldForIndependentHadwiger) {
  for (const Graph& g : sample(107, 40, 1, 7, 0.5)) {
    const int h = ref::hadwiger_number(g);
    EXPECT_EQ(hadwiger_number(g).t, h);
    EXPECT_LE(h, max_complete_order_within(1, beth1(g)));
    EXPECT_LE(h, max_complete_order_within(2, beth2(g)));
    EXPECT_LE(h, max_complete_order_within(3, beth3(g)));
  }
}

TEST(Property, CompressionMonotone) {
  SearchBudget budget;
  for (const Graph& g : sample(108, 60, 2, 8, 0.5)) {
    const auto b2 = beth2(g);
    const auto b3 = beth3(g);
    for (Vertex w = 0; w < g.order(); ++w) {
      for (const Compression& c : vertex_compressions(g, w, 4, budget)) {
        EXPECT_LE(beth2(c.graph), b2) << to_graph6(g) << " w=" << w;
        EXPECT_LE(beth3(c.graph), b3) << to_graph6(g) << " w=" << w;
      }
    }
  }
}

TEST(Property, ContractionDoesNotLengthenCycles) {
  for (const Graph& g : sample(109, 60, 2, 8, 0.45)) {
    const int l = ref::longest_cycle(g);
    for (const EdgeRef& e : g.edges()) EXPECT_LE(longest_cycle_length(contract_edge(g, e).graph), l);
  }
}
