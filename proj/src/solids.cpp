#include "beth/solids.hpp"

#include <algorithm>
#include <unordered_set>

#include "beth/errors.hpp"
#include "beth/operations.hpp"

namespace beth {

std::string kind_name(const SolidKind& kind) {
  constexpr std::array<const char*, 4> names = {"pyramid", "trihedron", "stamp", "prism"};
  return names[kind.index()];
}

std::vector<Vertex> feature_vertices(const SolidKind& kind) {
  struct Visitor {
    std::vector<Vertex> operator()(const Pyramid& p) const { return {p.apex}; }
    std::vector<Vertex> operator()(const Trihedron& t) const { return {t.x, t.y}; }
    std::vector<Vertex> operator()(const Stamp& s) const {
      return {s.triangle[0], s.triangle[1], s.triangle[2], s.meet};
    }
    std::vector<Vertex> operator()(const Prism& p) const {
      return {p.top[0], p.top[1], p.top[2], p.bottom[0], p.bottom[1], p.bottom[2]};
    }
  };
  return std::visit(Visitor{}, kind);
}

namespace {

VertexSet vertices_of_degree(const Graph& h, int d) {
  VertexSet out = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == d) out |= bit(v);
  }
  return out;
}

// Follows degree-2 vertices from `from` through `first` and returns the first
// vertex of other degree (or `from` again if the walk closes up).
Vertex walk_to_branch(const Graph& h, Vertex from, Vertex first) {
  Vertex prev = from;
  Vertex cur = first;
  while (cur != from && h.degree(cur) == 2) {
    const Vertex next = lowest(h.neighbors(cur) & ~bit(prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

std::optional<Pyramid> as_pyramid(const Graph& h) {
  const int n = h.order();
  if (n < 4) return std::nullopt;
  for (Vertex w = 0; w < n; ++w) {
    if (h.degree(w) < 3) continue;
    const VertexSet rest = h.vertices() & ~bit(w);
    if (induces_cycle(h, rest)) return Pyramid{w};
  }
  return std::nullopt;
}

std::optional<Trihedron> as_trihedron(const Graph& h) {
  const VertexSet deg3 = vertices_of_degree(h, 3);
  const VertexSet deg2 = vertices_of_degree(h, 2);
  if (popcount(deg3) != 2 || (deg3 | deg2) != h.vertices() || !is_connected(h)) return std::nullopt;
  const Vertex x = lowest(deg3);
  const Vertex y = lowest(deg3 & ~bit(x));
  // A direct xy path would be a chord of the cycle formed by the other two,
  // leaving a non-closed pair of faces (the diamond); all paths need length >= 2.
  if (h.has_edge(x, y)) return std::nullopt;
  for (Vertex first : members(h.neighbors(x))) {
    if (walk_to_branch(h, x, first) != y) return std::nullopt;
  }
  return Trihedron{x, y};
}

bool is_triangle(const Graph& h, Vertex a, Vertex b, Vertex c) {
  return h.has_edge(a, b) && h.has_edge(b, c) && h.has_edge(a, c);
}

std::optional<Stamp> as_stamp(const Graph& h) {
  const VertexSet deg3 = vertices_of_degree(h, 3);
  const VertexSet deg2 = vertices_of_degree(h, 2);
  if (popcount(deg3) != 4 || (deg3 | deg2) != h.vertices() || !is_connected(h)) return std::nullopt;
  const auto d = members(deg3);
  for (int skip = 3; skip >= 0; --skip) {
    std::array<Vertex, 3> tri{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) tri[k++] = d[i];
    }
    if (!is_triangle(h, tri[0], tri[1], tri[2])) continue;
    const Vertex meet = d[skip];
    const VertexSet tri_set = bit(tri[0]) | bit(tri[1]) | bit(tri[2]);
    bool ok = true;
    for (Vertex t : tri) {
      const Vertex out = lowest(h.neighbors(t) & ~tri_set);
      ok = ok && walk_to_branch(h, t, out) == meet;
    }
    if (ok) return Stamp{tri, meet};
  }
  return std::nullopt;
}

std::optional<Prism> as_prism(const Graph& h) {
  const VertexSet deg3 = vertices_of_degree(h, 3);
  const VertexSet deg2 = vertices_of_degree(h, 2);
  if (popcount(deg3) != 6 || (deg3 | deg2) != h.vertices() || !is_connected(h)) return std::nullopt;
  const Vertex a = lowest(deg3);
  const auto others = members(deg3 & ~bit(a));
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = i + 1; j < others.size(); ++j) {
      const std::array<Vertex, 3> top = {a, others[i], others[j]};
      if (!is_triangle(h, top[0], top[1], top[2])) continue;
      const auto rest = members(deg3 & ~(bit(top[0]) | bit(top[1]) | bit(top[2])));
      if (!is_triangle(h, rest[0], rest[1], rest[2])) continue;
      const VertexSet top_set = bit(top[0]) | bit(top[1]) | bit(top[2]);
      const VertexSet bottom_set = bit(rest[0]) | bit(rest[1]) | bit(rest[2]);
      std::array<Vertex, 3> bottom{};
      VertexSet hit = 0;
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        const Vertex out = lowest(h.neighbors(top[t]) & ~top_set);
        const Vertex end = walk_to_branch(h, top[t], out);
        ok = (bit(end) & bottom_set & ~hit) != 0;
        bottom[t] = end;
        hit |= bit(end);
      }
      if (ok) return Prism{top, bottom};
    }
  }
  return std::nullopt;
}

SolidKind relabel(const SolidKind& kind, const std::vector<Vertex>& origin) {
  struct Visitor {
    const std::vector<Vertex>& o;
    SolidKind operator()(const Pyramid& p) const { return Pyramid{o[p.apex]}; }
    SolidKind operator()(const Trihedron& t) const { return Trihedron{o[t.x], o[t.y]}; }
    SolidKind operator()(const Stamp& s) const {
      return Stamp{{o[s.triangle[0]], o[s.triangle[1]], o[s.triangle[2]]}, o[s.meet]};
    }
    SolidKind operator()(const Prism& p) const {
      return Prism{{o[p.top[0]], o[p.top[1]], o[p.top[2]]}, {o[p.bottom[0]], o[p.bottom[1]], o[p.bottom[2]]}};
    }
  };
  return std::visit(Visitor{origin}, kind);
}

std::optional<Solid> classify_subset(const Graph& g, VertexSet s) {
  const InducedSubgraph sub = induced_subgraph(g, s);
  const auto kind = classify_solid(sub.graph);
  if (!kind) return std::nullopt;
  return Solid{s, relabel(*kind, sub.origin)};
}

void sort_solids(std::vector<Solid>& solids) {
  std::sort(solids.begin(), solids.end(),
            [](const Solid& a, const Solid& b) { return members(a.vertices) < members(b.vertices); });
}

}  // namespace

std::optional<SolidKind> classify_solid(const Graph& h) {
  if (auto p = as_pyramid(h)) return *p;
  if (auto t = as_trihedron(h)) return *t;
  if (auto s = as_stamp(h)) return *s;
  if (auto p = as_prism(h)) return *p;
  return std::nullopt;
}

std::vector<Solid> enumerate_solids(const Graph& g, const std::vector<InducedCycle>& cycles) {
  std::vector<VertexSet> sets;
  sets.reserve(cycles.size());
  for (const InducedCycle& c : cycles) sets.push_back(c.vertex_set());

  std::unordered_set<VertexSet> tried;
  std::vector<Solid> out;
  auto consider = [&](VertexSet s) {
    if (!tried.insert(s).second) return;
    if (auto solid = classify_subset(g, s)) out.push_back(std::move(*solid));
  };

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (popcount(sets[i] & sets[j]) >= 2) consider(sets[i] | sets[j]);
    }
    VertexSet around = 0;
    for (Vertex w : members(g.vertices() & ~sets[i])) {
      if (popcount(g.neighbors(w) & sets[i]) >= 3) around |= bit(w);
    }
    for (Vertex w : members(around)) consider(sets[i] | bit(w));
  }
  sort_solids(out);
  return out;
}

std::vector<Solid> enumerate_solids(const Graph& g, std::size_t cycle_cap) {
  return enumerate_solids(g, enumerate_induced_cycles(g, cycle_cap));
}

std::vector<Solid> enumerate_solids_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteforceSolidMaxOrder) throw GraphError("enumerate_solids_bruteforce: graph too large");
  std::vector<Solid> out;
  for (VertexSet s = 1; s <= full_set(n) && s != 0; ++s) {
    if (popcount(s) < 4) continue;
    if (auto solid = classify_subset(g, s)) out.push_back(std::move(*solid));
  }
  sort_solids(out);
  return out;
}

std::vector<VertexSet> solid_vertex_sets(const std::vector<Solid>& solids) {
  std::vector<VertexSet> out;
  out.reserve(solids.size());
  for (const Solid& s : solids) out.push_back(s.vertices);
  return out;
}

}  // namespace beth
