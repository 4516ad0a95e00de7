#include "beth/cycles.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "beth/errors.hpp"
#include "beth/operations.hpp"

namespace beth {

InducedCycle::InducedCycle(std::vector<Vertex> traversal) {
  if (traversal.size() < 3) throw GraphError("a cycle needs at least 3 vertices");
  const auto least = std::min_element(traversal.begin(), traversal.end());
  std::rotate(traversal.begin(), least, traversal.end());
  if (traversal[1] > traversal.back()) std::reverse(traversal.begin() + 1, traversal.end());
  vertices_ = std::move(traversal);
}

VertexSet InducedCycle::vertex_set() const { return make_set(vertices_); }

std::vector<EdgeRef> InducedCycle::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.push_back(EdgeRef::of(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
  }
  return out;
}

bool InducedCycle::uses_edge(EdgeRef e) const {
  const std::size_t k = vertices_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (EdgeRef::of(vertices_[i], vertices_[(i + 1) % k]) == e) return true;
  }
  return false;
}

namespace {

// Depth-first growth of chordless paths anchored at the least vertex of the
// cycle being built. `interior_nbrs` holds the neighbourhood of every path
// vertex except the anchor and the current end; touching it would create a
// chord.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t cap, std::vector<InducedCycle>* out)
      : g_(g), cap_(cap), out_(out) {}

  void run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      anchor_ = s;
      allowed_ = g_.vertices() & ~full_set(s + 1);
      path_ = {s};
      for (Vertex p1 : members(g_.neighbors(s) & allowed_)) {
        path_.push_back(p1);
        extend(bit(s) | bit(p1), 0);
        path_.pop_back();
      }
    }
  }

  std::size_t found() const { return found_; }

 private:
  void extend(VertexSet on_path, VertexSet interior_nbrs) {
    const Vertex last = path_.back();
    const VertexSet next_interior = path_.size() >= 3 ? interior_nbrs | g_.neighbors(path_[path_.size() - 2]) : 0;
    const VertexSet candidates = g_.neighbors(last) & allowed_ & ~on_path & ~next_interior;
    for (Vertex w : members(candidates)) {
      if (g_.has_edge(w, anchor_)) {
        // Closing vertex; each cycle is met in both directions, keep one.
        if (path_[1] < w) emit(w);
        continue;
      }
      path_.push_back(w);
      extend(on_path | bit(w), next_interior);
      path_.pop_back();
    }
  }

  void emit(Vertex w) {
    if (++found_ > cap_) {
      throw BudgetExceeded("induced cycle enumeration exceeded cap of " + std::to_string(cap_));
    }
    if (out_ != nullptr) {
      std::vector<Vertex> cyc = path_;
      cyc.push_back(w);
      out_->push_back(InducedCycle(std::move(cyc)));
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<InducedCycle>* out_;
  std::size_t found_ = 0;
  Vertex anchor_ = 0;
  VertexSet allowed_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace

std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, std::size_t cap) {
  std::vector<InducedCycle> out;
  CycleSearch search(g, cap, &out);
  search.run();
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_induced_cycles(const Graph& g, std::size_t cap) {
  CycleSearch search(g, cap, nullptr);
  search.run();
  return search.found();
}

bool induces_cycle(const Graph& g, VertexSet s) {
  if (popcount(s) < 3) return false;
  for (Vertex v : members(s)) {
    if (popcount(g.neighbors(v) & s) != 2) return false;
  }
  return is_connected_set(g, s);
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& traversal) {
  const std::size_t k = traversal.size();
  if (k < 3) return false;
  for (Vertex v : traversal) {
    if (v < 0 || v >= g.order()) return false;
  }
  const VertexSet s = make_set(traversal);
  if (static_cast<std::size_t>(popcount(s)) != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(traversal[i], traversal[(i + 1) % k])) return false;
  }
  return induces_cycle(g, s);
}

int count_triangles_through_edge(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("count_triangles_through_edge: not an edge");
  return popcount(g.neighbors(e.u) & g.neighbors(e.v));
}

int count_length2_paths(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("count_length2_paths: endpoints coincide");
  return popcount(g.neighbors(u) & g.neighbors(v));
}

namespace {

class LongestCycle {
 public:
  explicit LongestCycle(const Graph& g) : g_(g) {}

  int run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      anchor_ = s;
      allowed_ = g_.vertices() & ~full_set(s);
      const VertexSet reach = reachable(g_, s, allowed_);
      if (popcount(reach) <= best_) continue;
      walk(s, bit(s), 1);
    }
    return best_;
  }

 private:
  void walk(Vertex last, VertexSet on_path, int length) {
    if (length >= 3 && g_.has_edge(last, anchor_)) best_ = std::max(best_, length);
    const VertexSet open = allowed_ & ~on_path;
    if (length + popcount(reachable(g_, last, open | bit(last))) - 1 <= best_) return;
    for (Vertex w : members(g_.neighbors(last) & open)) walk(w, on_path | bit(w), length + 1);
  }

  const Graph& g_;
  Vertex anchor_ = 0;
  VertexSet allowed_ = 0;
  int best_ = 0;
};

}  // namespace

int longest_cycle_length(const Graph& g) { return LongestCycle(g).run(); }

std::size_t count_induced_odd_cycles(const Graph& g, std::size_t cap) {
  const auto cycles = enumerate_induced_cycles(g, cap);
  return static_cast<std::size_t>(
      std::count_if(cycles.begin(), cycles.end(), [](const InducedCycle& c) { return c.length() % 2 == 1; }));
}

ContractionCensus contraction_cycle_census(const Graph& g, EdgeRef e, std::size_t cap) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("contraction_cycle_census: not an edge");
  const Contraction contracted = contract_edge(g, e);
  const VertexSet ends = bit(e.u) | bit(e.v);

  ContractionCensus census;
  std::map<VertexSet, std::int64_t> classes;
  for (const InducedCycle& c : enumerate_induced_cycles(g, cap)) {
    const VertexSet s = c.vertex_set();
    if (c.length() == 3 && (s & ends) == ends) {
      ++census.c3;
      continue;
    }
    const VertexSet image = contracted.map.image(s);
    if (induces_cycle(contracted.graph, image)) {
      ++classes[image];
    } else {
      ++census.s1;
    }
  }
  for (const auto& [image, size] : classes) {
    if (size == 2) ++census.s2;
    census.largest_class = std::max(census.largest_class, size);
  }
  return census;
}

}  // namespace beth
