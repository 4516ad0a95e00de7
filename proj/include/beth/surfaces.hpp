#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "beth/budget.hpp"
#include "beth/cycles.hpp"
#include "beth/graph.hpp"

namespace beth {

// A set of induced cycles, sorted. Closed when every edge of the union graph
// lies on exactly two members.
struct ClosedSet {
  std::vector<InducedCycle> cycles;

  std::map<EdgeRef, int> edge_usage() const;
  VertexSet vertex_set() const;
  bool operator==(const ClosedSet&) const = default;
};

// Throws GraphError when a member is not an induced cycle of g.
bool is_closed_set(const Graph& g, const std::vector<InducedCycle>& cycles);

// Unique split into indecomposable closed sets with pairwise edge-disjoint
// union graphs: the classes of "shares an edge" among the members.
std::vector<ClosedSet> decompose_closed_set(const Graph& g, const std::vector<InducedCycle>& cycles);

// Induced cycles on the vertices of `cycle` covering each of its edges once
// and each new edge twice. Built by repeatedly cutting off the induced cycle
// closed by a shortest-span chord.
std::vector<InducedCycle> refine_cycle(const Graph& g, const std::vector<Vertex>& cycle);

// Checks the three refinement properties for `refinement` against `cycle`.
bool is_refinement(const Graph& g, const std::vector<Vertex>& cycle, const std::vector<InducedCycle>& refinement);

struct MinimalSurface {
  VertexSet vertices = 0;
  // False when two closed sets inside `vertices` have different union graphs.
  bool strongly_minimal = true;
};

inline constexpr int kSurfaceMaxOrder = 10;
inline constexpr std::size_t kSurfaceMaxCycles = 64;

// Vertex sets of closed surfaces with no closed surface on a strictly smaller
// vertex subset, sorted by vertex list. Exact backtracking over cycle subsets
// with per-edge usage kept at most 2; independent of the solid classifier.
std::vector<MinimalSurface> enumerate_minimal_closed_surfaces(const Graph& g, SearchBudget& budget);
std::vector<MinimalSurface> enumerate_minimal_closed_surfaces(const Graph& g);

// Whether some nonempty closed subset of C(g) lives inside `within`.
bool has_closed_subset(const Graph& g, const std::vector<InducedCycle>& cycles, VertexSet within,
                       SearchBudget& budget);

}  // namespace beth
