#include "beth/operations.hpp"

#include <random>
#include <string>

#include "beth/errors.hpp"

namespace beth {

Contraction quotient(const Graph& g, const std::vector<VertexSet>& groups) {
  const int n = g.order();
  std::vector<Vertex> rep(n);
  for (Vertex v = 0; v < n; ++v) rep[v] = v;
  VertexSet seen = 0;
  for (VertexSet group : groups) {
    if ((group & ~g.vertices()) != 0) throw GraphError("quotient: group outside vertex range");
    if ((group & seen) != 0) throw GraphError("quotient: groups overlap");
    seen |= group;
    if (group == 0) continue;
    const Vertex r = lowest(group);
    for (Vertex v : members(group)) rep[v] = r;
  }

  VertexMap map;
  map.target.assign(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] == v) map.target[v] = next++;
  }
  for (Vertex v = 0; v < n; ++v) map.target[v] = map.target[rep[v]];

  Graph out(next);
  for (const EdgeRef& e : g.edges()) {
    const Vertex a = map(e.u);
    const Vertex b = map(e.v);
    if (a != b) out.add_edge(a, b);
  }
  if (!g.labels().empty()) {
    std::vector<std::string> labels(next);
    for (Vertex v = 0; v < n; ++v) {
      std::string& l = labels[map(v)];
      l += l.empty() ? g.label(v) : "+" + g.label(v);
    }
    out.set_labels(std::move(labels));
  }
  return {std::move(out), std::move(map)};
}

Contraction contract_edge(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("contract_edge: not an edge");
  return quotient(g, {bit(e.u) | bit(e.v)});
}

Contraction contract_nonedge(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("contract_nonedge: endpoints coincide");
  if (g.has_edge(u, v)) throw GraphError("contract_nonedge: pair is an edge");
  return quotient(g, {bit(u) | bit(v)});
}

Cone cone(const Graph& g) {
  const int n = g.order();
  Graph out(n + 1);
  for (const EdgeRef& e : g.edges()) out.add_edge(e.u, e.v);
  for (Vertex v = 0; v < n; ++v) out.add_edge(v, n);
  if (!g.labels().empty()) {
    auto labels = g.labels();
    labels.push_back("w");
    out.set_labels(std::move(labels));
  }
  return {std::move(out), n};
}

Graph subdivide_edge(const Graph& g, EdgeRef e, int k) {
  if (k < 2) throw GraphError("subdivide_edge: path length must be at least 2");
  if (!g.has_edge(e.u, e.v)) throw GraphError("subdivide_edge: not an edge");
  const int n = g.order();
  Graph out(n + k - 1);
  for (const EdgeRef& f : g.edges()) {
    if (f != e) out.add_edge(f.u, f.v);
  }
  Vertex prev = e.u;
  for (int i = 0; i < k - 1; ++i) {
    out.add_edge(prev, n + i);
    prev = n + i;
  }
  out.add_edge(prev, e.v);
  return out;
}

Graph delete_edge(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("delete_edge: not an edge");
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || !g.has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace

Graph clique_sum(const Graph& g1, const Graph& g2, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  if (pairs.empty()) throw GraphError("clique_sum: empty clique");
  std::vector<Vertex> side1;
  std::vector<Vertex> side2;
  for (auto [a, b] : pairs) {
    side1.push_back(a);
    side2.push_back(b);
  }
  if (!is_clique(g1, side1) || !is_clique(g2, side2)) {
    throw GraphError("clique_sum: designated vertices do not form cliques");
  }

  std::vector<Vertex> map2(g2.order(), -1);
  for (auto [a, b] : pairs) map2[b] = a;
  int next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (map2[v] < 0) map2[v] = next++;
  }

  Graph out(next);
  for (const EdgeRef& e : g1.edges()) out.add_edge(e.u, e.v);
  for (const EdgeRef& e : g2.edges()) out.add_edge(map2[e.u], map2[e.v]);
  return out;
}

Graph hajos_merge(const Graph& g1, const Graph& g2, Vertex x1, Vertex y1, Vertex x2, Vertex y2) {
  if (!g1.has_edge(x1, y1) || !g2.has_edge(x2, y2)) throw GraphError("hajos_merge: named pairs must be edges");

  std::vector<Vertex> map2(g2.order(), -1);
  map2[x2] = x1;
  int next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (v != x2) map2[v] = next++;
  }

  Graph out(next);
  for (const EdgeRef& e : g1.edges()) {
    if (e != EdgeRef::of(x1, y1)) out.add_edge(e.u, e.v);
  }
  for (const EdgeRef& e : g2.edges()) {
    if (e != EdgeRef::of(x2, y2)) out.add_edge(map2[e.u], map2[e.v]);
  }
  out.add_edge(y1, map2[y2]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0) throw GraphError("induced_subgraph: vertex id out of range");
  InducedSubgraph out{Graph(popcount(s)), members(s)};
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < out.origin.size(); ++i) index[out.origin[i]] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < out.origin.size(); ++i) {
    for (Vertex w : members(g.neighbors(out.origin[i]) & s)) {
      if (index[w] > static_cast<Vertex>(i)) out.graph.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : out.origin) labels.push_back(g.label(v));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = bit(start) & within;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (Vertex v : members(frontier)) next |= g.neighbors(v);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected_set(const Graph& g, VertexSet s) {
  if (s == 0) return true;
  return reachable(g, lowest(s), s) == s;
}

bool is_connected(const Graph& g) { return is_connected_set(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet comp = reachable(g, lowest(left), left);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_cut_edge(const Graph& g, EdgeRef e) {
  const Graph h = delete_edge(g, e);
  return (reachable(h, e.u, h.vertices()) & bit(e.v)) == 0;
}

std::optional<std::pair<Vertex, Vertex>> find_distance_two_pair(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet two = 0;
    for (Vertex w : members(g.neighbors(u))) two |= g.neighbors(w);
    two &= ~g.neighbors(u) & ~bit(u);
    if (two != 0) return std::pair{u, lowest(two)};
  }
  return std::nullopt;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw GraphError("random_connected_graph: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("random_connected_graph: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // 53-bit uniform draw; avoids implementation-defined distributions so the
  // output is identical across standard libraries.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
  for (int attempt = 0; attempt < kRandomGraphAttempts; ++attempt) {
    Graph g(n);
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (coin()) g.add_edge(i, j);
      }
    }
    if (is_connected(g)) return g;
  }
  throw BudgetExceeded("random_connected_graph: no connected sample after " +
                       std::to_string(kRandomGraphAttempts) + " attempts");
}

}  // namespace beth
