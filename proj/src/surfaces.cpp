#include "beth/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "beth/errors.hpp"

namespace beth {

std::map<EdgeRef, int> ClosedSet::edge_usage() const {
  std::map<EdgeRef, int> usage;
  for (const InducedCycle& c : cycles) {
    for (const EdgeRef& e : c.edges()) ++usage[e];
  }
  return usage;
}

VertexSet ClosedSet::vertex_set() const {
  VertexSet s = 0;
  for (const InducedCycle& c : cycles) s |= c.vertex_set();
  return s;
}

namespace {

void require_induced(const Graph& g, const std::vector<InducedCycle>& cycles) {
  for (const InducedCycle& c : cycles) {
    if (!is_induced_cycle(g, c.vertices())) throw GraphError("member is not an induced cycle of the graph");
  }
}

}  // namespace

bool is_closed_set(const Graph& g, const std::vector<InducedCycle>& cycles) {
  require_induced(g, cycles);
  if (cycles.empty()) return false;
  const ClosedSet set{cycles};
  const auto usage = set.edge_usage();
  return std::all_of(usage.begin(), usage.end(), [](const auto& kv) { return kv.second == 2; });
}

std::vector<ClosedSet> decompose_closed_set(const Graph& g, const std::vector<InducedCycle>& cycles) {
  if (!is_closed_set(g, cycles)) throw GraphError("decompose_closed_set: input is not closed");
  std::vector<InducedCycle> sorted = cycles;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const std::size_t k = sorted.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<EdgeRef, std::size_t> first_user;
  for (std::size_t i = 0; i < k; ++i) {
    for (const EdgeRef& e : sorted[i].edges()) {
      auto [it, fresh] = first_user.emplace(e, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }

  std::map<std::size_t, ClosedSet> groups;
  for (std::size_t i = 0; i < k; ++i) groups[find(i)].cycles.push_back(sorted[i]);
  std::vector<ClosedSet> out;
  for (auto& [root, set] : groups) out.push_back(std::move(set));
  std::sort(out.begin(), out.end(),
            [](const ClosedSet& a, const ClosedSet& b) { return a.cycles.front() < b.cycles.front(); });
  return out;
}

namespace {

void require_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw GraphError("refine_cycle: a cycle needs at least 3 vertices");
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order()) throw GraphError("refine_cycle: vertex id out of range");
  }
  if (static_cast<std::size_t>(popcount(make_set(cycle))) != k) throw GraphError("refine_cycle: repeated vertex");
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) throw GraphError("refine_cycle: consecutive vertices not adjacent");
  }
}

}  // namespace

std::vector<InducedCycle> refine_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  require_cycle(g, cycle);
  std::vector<InducedCycle> out;
  std::vector<Vertex> rest = cycle;
  while (true) {
    const std::size_t k = rest.size();
    // Chord with the shortest span; the side it spans is chordless.
    std::size_t best_i = 0;
    std::size_t best_span = k;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t span = 2; span + 1 < k && span < best_span; ++span) {
        if (g.has_edge(rest[i], rest[(i + span) % k])) {
          best_i = i;
          best_span = span;
          break;
        }
      }
    }
    if (best_span == k) {
      out.push_back(InducedCycle(rest));
      break;
    }
    std::vector<Vertex> cut;
    std::vector<Vertex> remaining;
    for (std::size_t s = 0; s <= best_span; ++s) cut.push_back(rest[(best_i + s) % k]);
    for (std::size_t s = best_span; s <= k; ++s) remaining.push_back(rest[(best_i + s) % k]);
    out.push_back(InducedCycle(std::move(cut)));
    rest = std::move(remaining);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_refinement(const Graph& g, const std::vector<Vertex>& cycle, const std::vector<InducedCycle>& refinement) {
  for (const InducedCycle& c : refinement) {
    if (!is_induced_cycle(g, c.vertices())) return false;
  }
  const ClosedSet set{refinement};
  if (set.vertex_set() != make_set(cycle)) return false;
  std::set<EdgeRef> original;
  for (std::size_t i = 0; i < cycle.size(); ++i) original.insert(EdgeRef::of(cycle[i], cycle[(i + 1) % cycle.size()]));
  const auto usage = set.edge_usage();
  for (const EdgeRef& e : original) {
    auto it = usage.find(e);
    if (it == usage.end() || it->second != 1) return false;
  }
  for (const auto& [e, count] : usage) {
    if (!original.contains(e) && count != 2) return false;
  }
  return true;
}

namespace {

// Exact search for closed subsets among a fixed list of cycles. Members are
// added in increasing index order after the first; any edge used once must be
// covered by a later cycle, so the search always branches on such an edge.
class ClosedSearch {
 public:
  ClosedSearch(const std::vector<InducedCycle>& cycles, SearchBudget& budget) : budget_(budget) {
    std::map<EdgeRef, int> index;
    for (const InducedCycle& c : cycles) {
      std::vector<int> es;
      for (const EdgeRef& e : c.edges()) {
        auto [it, fresh] = index.emplace(e, static_cast<int>(index.size()));
        es.push_back(it->second);
      }
      cycle_edges_.push_back(std::move(es));
    }
    edge_users_.resize(index.size());
    for (std::size_t i = 0; i < cycle_edges_.size(); ++i) {
      for (int e : cycle_edges_[i]) edge_users_[e].push_back(static_cast<int>(i));
    }
    usage_.assign(index.size(), 0);
    edge_count_ = static_cast<int>(index.size());
  }

  // Visits every nonempty closed subset of `active`; stop early by returning false.
  template <typename Visit>
  void for_each_closed(const std::vector<bool>& active, Visit&& visit) {
    budget_.charge();
    active_ = active;
    stop_ = false;
    for (int first = 0; first < static_cast<int>(cycle_edges_.size()) && !stop_; ++first) {
      if (!active_[first]) continue;
      first_ = first;
      chosen_ = {first};
      apply(first, +1);
      search(visit);
      apply(first, -1);
    }
  }

 private:
  void apply(int c, int delta) {
    for (int e : cycle_edges_[c]) usage_[e] += delta;
  }

  bool fits(int c) const {
    return std::all_of(cycle_edges_[c].begin(), cycle_edges_[c].end(), [&](int e) { return usage_[e] < 2; });
  }

  template <typename Visit>
  void search(Visit& visit) {
    budget_.charge();
    int open_edge = -1;
    int fewest = 1 << 30;
    for (int e = 0; e < edge_count_; ++e) {
      if (usage_[e] != 1) continue;
      int options = 0;
      for (int c : edge_users_[e]) options += (c > first_ && active_[c] && !in_set(c) && fits(c)) ? 1 : 0;
      if (options < fewest) {
        fewest = options;
        open_edge = e;
      }
    }
    if (open_edge < 0) {
      if (!visit(chosen_)) stop_ = true;
      return;
    }
    for (int c : edge_users_[open_edge]) {
      if (stop_) return;
      if (c <= first_ || !active_[c] || in_set(c) || !fits(c)) continue;
      chosen_.push_back(c);
      apply(c, +1);
      search(visit);
      apply(c, -1);
      chosen_.pop_back();
    }
  }

  bool in_set(int c) const { return std::find(chosen_.begin(), chosen_.end(), c) != chosen_.end(); }

  SearchBudget& budget_;
  std::vector<std::vector<int>> cycle_edges_;
  std::vector<std::vector<int>> edge_users_;
  std::vector<int> usage_;
  std::vector<bool> active_;
  std::vector<int> chosen_;
  int edge_count_ = 0;
  int first_ = 0;
  bool stop_ = false;
};

std::vector<bool> cycles_within(const std::vector<InducedCycle>& cycles, VertexSet within) {
  std::vector<bool> active;
  active.reserve(cycles.size());
  for (const InducedCycle& c : cycles) active.push_back((c.vertex_set() & ~within) == 0);
  return active;
}

}  // namespace

bool has_closed_subset(const Graph& g, const std::vector<InducedCycle>& cycles, VertexSet within,
                       SearchBudget& budget) {
  (void)g;
  ClosedSearch search(cycles, budget);
  bool found = false;
  search.for_each_closed(cycles_within(cycles, within), [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<MinimalSurface> enumerate_minimal_closed_surfaces(const Graph& g, SearchBudget& budget) {
  budget.charge(2);
  const int n = g.order();
  if (n > kSurfaceMaxOrder) throw GraphError("enumerate_minimal_closed_surfaces: graph too large");
  const auto cycles = enumerate_induced_cycles(g);
  if (cycles.size() > kSurfaceMaxCycles) {
    throw GraphError("enumerate_minimal_closed_surfaces: too many induced cycles");
  }

  // Subsets by increasing size. A subset admitting a closed set, with no
  // already-found minimal set inside it, is itself spanned by that closed set.
  std::vector<VertexSet> subsets;
  for (VertexSet s = 1; s <= full_set(n) && s != 0; ++s) {
    if (popcount(s) >= 3) subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });

  ClosedSearch search(cycles, budget);
  std::vector<MinimalSurface> out;
  for (VertexSet s : subsets) {
    const bool covers_known = std::any_of(out.begin(), out.end(),
                                          [&](const MinimalSurface& m) { return (m.vertices & ~s) == 0; });
    if (covers_known) continue;

    std::set<std::set<EdgeRef>> unions;
    search.for_each_closed(cycles_within(cycles, s), [&](const std::vector<int>& chosen) {
      std::set<EdgeRef> edges;
      for (int c : chosen) {
        for (const EdgeRef& e : cycles[c].edges()) edges.insert(e);
      }
      unions.insert(std::move(edges));
      return true;
    });
    if (!unions.empty()) out.push_back({s, unions.size() == 1});
  }
  std::sort(out.begin(), out.end(), [](const MinimalSurface& a, const MinimalSurface& b) {
    return members(a.vertices) < members(b.vertices);
  });
  return out;
}

std::vector<MinimalSurface> enumerate_minimal_closed_surfaces(const Graph& g) {
  SearchBudget budget(default_budget(), "minimal closed surface search");
  return enumerate_minimal_closed_surfaces(g, budget);
}

}  // namespace beth
