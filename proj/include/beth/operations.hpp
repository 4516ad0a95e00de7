#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "beth/graph.hpp"

namespace beth {

// Result of merging vertices. The merged vertex takes the smallest id of the
// merged group; all other ids are compacted in order.
struct Contraction {
  Graph graph;
  VertexMap map;
};

Contraction contract_edge(const Graph& g, EdgeRef e);
Contraction contract_nonedge(const Graph& g, Vertex u, Vertex v);

// Quotient by a family of disjoint vertex groups, each merged to one vertex
// (loops dropped, parallel edges merged). Groups may be adjacent internally.
Contraction quotient(const Graph& g, const std::vector<VertexSet>& groups);

struct Cone {
  Graph graph;
  Vertex apex;
};
Cone cone(const Graph& g);

// Replace edge e by a path of length k (k - 1 new vertices appended).
Graph subdivide_edge(const Graph& g, EdgeRef e, int k);

Graph delete_edge(const Graph& g, EdgeRef e);

// Glue g2 onto g1 by identifying pairs (a in g1, b in g2). Both sides must
// be cliques of the same size. g1 keeps its ids; unpaired g2 vertices follow.
Graph clique_sum(const Graph& g1, const Graph& g2, const std::vector<std::pair<Vertex, Vertex>>& pairs);

// (G1 ∪ G2) - x y1 - x y2 + y1 y2 with x1 ≡ x2 ≡ x. g1 keeps its ids; the
// vertices of g2 other than x2 follow in order.
Graph hajos_merge(const Graph& g1, const Graph& g2, Vertex x1, Vertex y1, Vertex x2, Vertex y2);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;  // origin[i] = host id of vertex i
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
// Vertices reachable from `start` inside `within`.
VertexSet reachable(const Graph& g, Vertex start, VertexSet within);
bool is_connected_set(const Graph& g, VertexSet s);
bool is_cut_edge(const Graph& g, EdgeRef e);

// A pair at distance exactly 2; always exists in a connected non-complete graph.
std::optional<std::pair<Vertex, Vertex>> find_distance_two_pair(const Graph& g);

// Erdős–Rényi G(n, p) conditioned on connectivity by rejection sampling.
// Deterministic in (n, p, seed); throws BudgetExceeded after the attempt cap.
inline constexpr int kRandomGraphAttempts = 10'000;
Graph random_connected_graph(int n, double p, std::uint64_t seed);

}  // namespace beth
