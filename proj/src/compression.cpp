#include <algorithm>
#include <numeric>
#include <random>

#include "beth/oracles.hpp"

namespace beth {

VertexSet closed_neighborhood(const Graph& g, Vertex w) {
  return g.neighbors(w) | bit(w);
}

namespace {

void require_connected_vertex(const Graph& g, Vertex w) {
  if (w < 0 || w >= g.order()) throw GraphError("vertex out of range");
  if (!is_connected(g)) throw DisconnectedGraph();
}

VertexMap identity_map(int n) {
  VertexMap m{std::vector<Vertex>(n)};
  std::iota(m.target.begin(), m.target.end(), 0);
  return m;
}

// Colours of G[N[w]] lifted to host ids, ordered by least member.
std::vector<VertexSet> host_classes(const InducedSubgraph& sub, const Coloring& c) {
  std::vector<VertexSet> out;
  for (VertexSet s : c.classes()) {
    VertexSet host = 0;
    for (Vertex v : members(s)) host |= bit(sub.origin[v]);
    out.push_back(host);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
  return out;
}

}  // namespace

Compression vertex_compress_with(const Graph& g, Vertex w, const std::vector<VertexSet>& classes) {
  require_connected_vertex(g, w);
  const VertexSet closed = closed_neighborhood(g, w);
  VertexSet seen = 0;
  for (VertexSet s : classes) {
    if (s == 0 || (s & seen) || (s & ~closed)) throw GraphError("classes must partition the closed neighbourhood");
    for (Vertex v : members(s)) {
      if (g.neighbors(v) & s) throw GraphError("colour class is not independent");
    }
    seen |= s;
  }
  if (seen != closed) throw GraphError("classes must partition the closed neighbourhood");

  Compression out{g, identity_map(g.order()), classes};
  for (VertexSet s : classes) {
    const std::vector<Vertex> vs = members(s);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      Contraction c = contract_nonedge(out.graph, out.map(vs[0]), out.map(vs[i]));
      out.graph = std::move(c.graph);
      out.map = out.map.then(c.map);
    }
  }
  const InducedSubgraph image = induced_subgraph(out.graph, out.map.image(closed));
  if (!image.graph.is_complete()) throw GraphError("colouring of the closed neighbourhood is not optimal");
  return out;
}

Compression vertex_compress(const Graph& g, Vertex w, SearchBudget& budget) {
  require_connected_vertex(g, w);
  const InducedSubgraph sub = induced_subgraph(g, closed_neighborhood(g, w));
  const Coloring coloring = chromatic_number(sub.graph, budget);
  if (sub.graph.is_complete()) {
    std::vector<VertexSet> singles;
    for (Vertex v : members(closed_neighborhood(g, w))) singles.push_back(bit(v));
    return Compression{g, identity_map(g.order()), singles};
  }
  return vertex_compress_with(g, w, host_classes(sub, coloring));
}

Compression vertex_compress(const Graph& g, Vertex w) {
  SearchBudget budget(default_budget(), "vertex compression");
  return vertex_compress(g, w, budget);
}

std::vector<Compression> vertex_compressions(const Graph& g, Vertex w, std::size_t limit, SearchBudget& budget) {
  require_connected_vertex(g, w);
  const InducedSubgraph sub = induced_subgraph(g, closed_neighborhood(g, w));
  std::vector<Compression> out;
  for (const Coloring& c : optimal_colorings(sub.graph, limit, budget)) {
    out.push_back(vertex_compress_with(g, w, host_classes(sub, c)));
  }
  return out;
}

std::vector<Graph> compress_to_complete(const Graph& g, std::uint64_t seed, SearchBudget& budget) {
  if (!is_connected(g)) throw DisconnectedGraph();
  std::mt19937_64 rng(seed);
  std::vector<Graph> out{g};
  while (!out.back().is_complete()) {
    const Graph& cur = out.back();
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < cur.order(); ++v) {
      if (!induced_subgraph(cur, closed_neighborhood(cur, v)).graph.is_complete()) candidates.push_back(v);
    }
    // A connected non-complete graph has a vertex with two non-adjacent neighbours.
    const Vertex w = candidates[rng() % candidates.size()];
    out.push_back(vertex_compress(cur, w, budget).graph);
  }
  return out;
}

}  // namespace beth
