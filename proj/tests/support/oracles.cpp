#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace ref {

namespace {

bool connected_within(const Graph& g, VertexSet s) {
  if (s == 0) return true;
  VertexSet seen = VertexSet{1} << std::countr_zero(s);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!(seen >> v & 1)) continue;
      const VertexSet next = seen | (g.neighbors(v) & s);
      if (next != seen) {
        seen = next;
        grew = true;
      }
    }
  }
  return seen == s;
}

}  // namespace

std::vector<VertexSet> induced_cycle_sets(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.order();
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    if (std::popcount(s) < 3) continue;
    bool two_regular = true;
    for (Vertex v = 0; v < n && two_regular; ++v) {
      if ((s >> v & 1) && std::popcount(g.neighbors(v) & s) != 2) two_regular = false;
    }
    if (two_regular && connected_within(g, s)) out.push_back(s);
  }
  return out;
}

std::size_t count_induced_cycles(const Graph& g) { return induced_cycle_sets(g).size(); }

int triangles_through(const Graph& g, Vertex u, Vertex v) {
  int count = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++count;
  }
  return count;
}

bool colorable(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> c(n, 0);
  while (true) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      for (Vertex v = u + 1; v < n && ok; ++v) {
        if (g.has_edge(u, v) && c[u] == c[v]) ok = false;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

int chromatic_number(const Graph& g) {
  int k = 0;
  while (!colorable(g, k)) ++k;
  return k;
}

int clique_number(const Graph& g) {
  int best = 0;
  const int n = g.order();
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    bool clique = true;
    for (Vertex v = 0; v < n && clique; ++v) {
      if ((s >> v & 1) && (g.neighbors(v) & s) != (s & ~(VertexSet{1} << v))) clique = false;
    }
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

Graph merge(const Graph& g, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const int n = g.order();
  std::vector<Vertex> to(n);
  for (Vertex x = 0; x < n; ++x) to[x] = x == v ? u : (x > v ? x - 1 : x);
  Graph out(n - 1);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b) && to[a] != to[b] && !out.has_edge(to[a], to[b])) out.add_edge(to[a], to[b]);
    }
  }
  return out;
}

int hadwiger_number(const Graph& g) {
  std::set<std::vector<VertexSet>> seen;
  std::vector<Graph> frontier{g};
  int best = 0;
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& h : frontier) {
      best = std::max(best, clique_number(h));
      for (Vertex a = 0; a < h.order(); ++a) {
        for (Vertex b = a + 1; b < h.order(); ++b) {
          if (!h.has_edge(a, b)) continue;
          Graph m = merge(h, a, b);
          std::vector<VertexSet> key;
          for (Vertex x = 0; x < m.order(); ++x) key.push_back(m.neighbors(x));
          if (seen.insert(key).second) next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  return best;
}

int longest_cycle(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3 || k <= best) continue;
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v) {
      if (s >> v & 1) vs.push_back(v);
    }
    // Fix the first vertex; permute the rest.
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.has_edge(vs[i], vs[(i + 1) % k]);
      if (ok) {
        best = k;
        break;
      }
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return best;
}

Graph decode_graph6(const std::string& s) {
  const int n = s[0] - 63;
  Graph g(n);
  int bitpos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bitpos) {
      const int byte = s[1 + bitpos / 6] - 63;
      if (byte >> (5 - bitpos % 6) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph octahedron() {
  Graph g = Graph::complete(6);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph prism() {
  Graph g(6);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}) g.add_edge(a, b);
  return g;
}

Graph wheel(int rim) {
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  return g;
}

}  // namespace ref
