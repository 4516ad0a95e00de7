#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "beth/graph.hpp"

namespace beth {

// A chordless cycle stored in canonical form: starts at its least vertex and
// walks toward the smaller of that vertex's two cycle neighbours.
class InducedCycle {
 public:
  InducedCycle() = default;
  // Canonicalizes any rotation/reflection of the traversal.
  explicit InducedCycle(std::vector<Vertex> traversal);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  VertexSet vertex_set() const;
  std::vector<EdgeRef> edges() const;
  bool uses_edge(EdgeRef e) const;

  auto operator<=>(const InducedCycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// All chordless cycles of g, sorted. Throws BudgetExceeded past `cap`.
std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);
std::size_t count_induced_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

// True iff s (|s| >= 3) induces a cycle in g.
bool induces_cycle(const Graph& g, VertexSet s);
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& traversal);

int count_triangles_through_edge(const Graph& g, EdgeRef e);
int count_length2_paths(const Graph& g, Vertex u, Vertex v);

// Length of a longest (not necessarily induced) cycle, 0 for forests.
int longest_cycle_length(const Graph& g);

std::size_t count_induced_odd_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

// Decomposition of |C(G)| - |C(G/e)|: triangles through e, cycles whose
// contracted vertex set no longer induces a cycle, and pairs of cycles that
// collapse onto the same induced cycle of G/e.
struct ContractionCensus {
  std::int64_t c3 = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  // Size of the largest same-image class; 2 at most if the counting argument holds.
  std::int64_t largest_class = 0;

  std::int64_t total() const { return c3 + s1 + s2; }
};

ContractionCensus contraction_cycle_census(const Graph& g, EdgeRef e, std::size_t cap = kDefaultCycleCap);

}  // namespace beth
