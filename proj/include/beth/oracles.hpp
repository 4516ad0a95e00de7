#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beth/budget.hpp"
#include "beth/graph.hpp"
#include "beth/operations.hpp"

namespace beth {

struct Coloring {
  std::vector<int> color;  // 0-based colour per vertex
  int k = 0;

  std::vector<VertexSet> classes() const;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

// Exact chromatic number by iterative deepening on k; the witness is the
// least colouring in branch order (descending degree, colours ascending).
Coloring chromatic_number(const Graph& g, SearchBudget& budget);
Coloring chromatic_number(const Graph& g);
// Whether a proper k-colouring exists.
bool is_colorable(const Graph& g, int k, SearchBudget& budget);
// Every optimal colouring up to renaming colours, at most `limit` of them.
std::vector<Coloring> optimal_colorings(const Graph& g, std::size_t limit, SearchBudget& budget);

// Branch sets indexed by pattern vertex.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;
};

bool is_minor_model(const Graph& g, const Graph& pattern, const MinorWitness& w);

// Model of `pattern` in g, or nullopt. Pattern must be connected. Searches
// partitions of each component into connected branch sets; leftover vertices
// of a connected host can always be absorbed into a neighbouring set.
std::optional<MinorWitness> find_minor(const Graph& g, const Graph& pattern, SearchBudget& budget);
std::optional<MinorWitness> has_complete_minor(const Graph& g, int t, SearchBudget& budget);
std::optional<MinorWitness> has_complete_minor(const Graph& g, int t);

struct HadwigerResult {
  int t = 0;
  MinorWitness witness;
  // Edge contractions, in the ids current at each step, taking g to K^t.
  // Present when g is connected.
  std::optional<std::vector<EdgeRef>> contraction_sequence;
};

// Largest t with a K^t minor (over all components when g is disconnected).
HadwigerResult hadwiger_number(const Graph& g, SearchBudget& budget);
HadwigerResult hadwiger_number(const Graph& g);

// Replays a contraction sequence produced by hadwiger_number.
Graph apply_contractions(const Graph& g, const std::vector<EdgeRef>& sequence);

// No K5 minor and no K3,3 minor.
bool is_planar_small(const Graph& g, SearchBudget& budget);
bool is_planar_small(const Graph& g);

struct Compression {
  Graph graph;
  VertexMap map;
  // Colour classes of the closed neighbourhood that were merged (host ids).
  std::vector<VertexSet> classes;
};

VertexSet closed_neighborhood(const Graph& g, Vertex w);

// Merges each colour class of an optimal colouring of G[N[w]] by nonedge
// contractions, in class order. Unchanged when N[w] is already a clique.
Compression vertex_compress(const Graph& g, Vertex w, SearchBudget& budget);
Compression vertex_compress(const Graph& g, Vertex w);
// Same, for a caller-chosen colour partition of N[w] (host ids); the
// partition must be optimal so that the image of N[w] is complete.
Compression vertex_compress_with(const Graph& g, Vertex w, const std::vector<VertexSet>& classes);
// Every compression realization from the optimal colourings of N[w].
std::vector<Compression> vertex_compressions(const Graph& g, Vertex w, std::size_t limit, SearchBudget& budget);

// Repeated vertex compression (seeded choice among compressible vertices)
// until the graph is complete; includes the input as the first entry.
std::vector<Graph> compress_to_complete(const Graph& g, std::uint64_t seed, SearchBudget& budget);

}  // namespace beth
