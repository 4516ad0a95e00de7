#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "beth/cycles.hpp"
#include "beth/graph.hpp"

namespace beth {

// An induced cycle plus an apex with at least three neighbours on it.
struct Pyramid {
  Vertex apex;
  bool operator==(const Pyramid&) const = default;
};

// Three internally disjoint paths of length >= 2 between two branch vertices.
struct Trihedron {
  Vertex x;
  Vertex y;
  bool operator==(const Trihedron&) const = default;
};

// A triangle whose corners run along disjoint paths to a common vertex.
struct Stamp {
  std::array<Vertex, 3> triangle;
  Vertex meet;
  bool operator==(const Stamp&) const = default;
};

// Two disjoint triangles joined by three disjoint paths top[i] -- bottom[i].
struct Prism {
  std::array<Vertex, 3> top;
  std::array<Vertex, 3> bottom;
  bool operator==(const Prism&) const = default;
};

using SolidKind = std::variant<Pyramid, Trihedron, Stamp, Prism>;

std::string kind_name(const SolidKind& kind);
// Feature vertices flattened in declaration order.
std::vector<Vertex> feature_vertices(const SolidKind& kind);

struct Solid {
  VertexSet vertices = 0;
  SolidKind kind;
};

// Recognizes the four solid graphs up to isomorphism, trying Pyramid,
// Trihedron, Stamp, Prism in that order. Features are the least-id choice.
std::optional<SolidKind> classify_solid(const Graph& h);

// Solids of g deduplicated by vertex set, sorted by vertex list. Every solid is
// the union of two of its faces, so pairs of induced cycles sharing at least
// two vertices generate all candidates.
std::vector<Solid> enumerate_solids(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);
std::vector<Solid> enumerate_solids(const Graph& g, const std::vector<InducedCycle>& cycles);

// Test oracle: classify every vertex subset of size >= 4. Requires n <= 16.
inline constexpr int kBruteforceSolidMaxOrder = 16;
std::vector<Solid> enumerate_solids_bruteforce(const Graph& g);

// Vertex sets of solids, in the order the enumerators return them.
std::vector<VertexSet> solid_vertex_sets(const std::vector<Solid>& solids);

}  // namespace beth
