#include <algorithm>
#include <numeric>

#include "beth/oracles.hpp"

namespace beth {

namespace {

VertexSet neighborhood_of(const Graph& g, VertexSet s) {
  VertexSet out = 0;
  for (Vertex v : members(s)) out |= g.neighbors(v);
  return out & ~s;
}

// Injective map pattern -> quotient preserving every pattern edge.
class SpanningEmbedding {
 public:
  SpanningEmbedding(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {}

  std::optional<std::vector<Vertex>> find() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    image_.assign(pattern_.order(), -1);
    if (rec(0, 0)) return image_;
    return std::nullopt;
  }

 private:
  bool rec(Vertex p, VertexSet used) {
    if (p == pattern_.order()) return true;
    for (Vertex h = 0; h < host_.order(); ++h) {
      if (used & bit(h)) continue;
      if (host_.degree(h) < pattern_.degree(p)) continue;
      bool ok = true;
      for (Vertex q = 0; q < p && ok; ++q) {
        if (pattern_.has_edge(p, q) && !host_.has_edge(h, image_[q])) ok = false;
      }
      if (!ok) continue;
      image_[p] = h;
      if (rec(p + 1, used | bit(h))) return true;
    }
    image_[p] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> image_;
};

// Partitions of one connected vertex set into exactly p connected, nonempty
// parts (restricted-growth labels over a BFS order), checking at each leaf
// whether the quotient contains the pattern as a spanning subgraph.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, VertexSet comp, const Graph& pattern, SearchBudget& budget)
      : g_(g), comp_(comp), pattern_(pattern), p_(pattern.order()), budget_(budget) {
    complete_ = pattern.is_complete();
    // BFS order from the least vertex keeps early parts connected-looking.
    VertexSet seen = bit(lowest(comp));
    order_.push_back(lowest(comp));
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex u : members(g.neighbors(order_[i]) & comp & ~seen)) {
        seen |= bit(u);
        order_.push_back(u);
      }
    }
    parts_.assign(p_, 0);
  }

  std::optional<MinorWitness> run() {
    budget_.charge();
    if (p_ == 0) return MinorWitness{};
    if (static_cast<int>(order_.size()) < p_) return std::nullopt;
    rec(0, 0);
    return result_;
  }

 private:
  void rec(std::size_t idx, int used) {
    budget_.charge();
    if (idx == order_.size()) {
      if (used == p_) leaf();
      return;
    }
    if (used + static_cast<int>(order_.size() - idx) < p_) return;
    const Vertex v = order_[idx];
    const int top = std::min(used + 1, p_);
    for (int q = 0; q < top && !result_; ++q) {
      parts_[q] |= bit(v);
      assigned_ |= bit(v);
      if (consistent(std::max(used, q + 1))) rec(idx + 1, std::max(used, q + 1));
      parts_[q] &= ~bit(v);
      assigned_ &= ~bit(v);
    }
  }

  bool consistent(int used) const {
    const VertexSet open = comp_ & ~assigned_;
    VertexSet nbr[kMaxVertices];
    bool closed[kMaxVertices];
    for (int q = 0; q < used; ++q) {
      nbr[q] = neighborhood_of(g_, parts_[q]);
      closed[q] = (nbr[q] & open) == 0;
      if (closed[q] && !is_connected_set(g_, parts_[q])) return false;
    }
    if (complete_) {
      for (int q = 0; q < used; ++q) {
        if (!closed[q]) continue;
        for (int r = 0; r < used; ++r) {
          if (r != q && !(nbr[q] & parts_[r])) return false;
        }
      }
    }
    return true;
  }

  void leaf() {
    if (complete_) {
      result_ = MinorWitness{parts_};
      return;
    }
    const Graph q = quotient(g_, parts_).graph;
    // quotient() orders merged vertices by their least member.
    std::vector<int> by_rep(p_);
    std::iota(by_rep.begin(), by_rep.end(), 0);
    std::sort(by_rep.begin(), by_rep.end(),
              [&](int a, int b) { return lowest(parts_[a]) < lowest(parts_[b]); });
    auto emb = SpanningEmbedding(q, pattern_).find();
    if (!emb) return;
    MinorWitness w;
    for (Vertex p = 0; p < p_; ++p) w.branch_sets.push_back(parts_[by_rep[(*emb)[p]]]);
    result_ = w;
  }

  const Graph& g_;
  VertexSet comp_;
  const Graph& pattern_;
  int p_;
  SearchBudget& budget_;
  bool complete_ = false;
  std::vector<Vertex> order_;
  std::vector<VertexSet> parts_;
  VertexSet assigned_ = 0;
  std::optional<MinorWitness> result_;
};

}  // namespace

bool is_minor_model(const Graph& g, const Graph& pattern, const MinorWitness& w) {
  if (static_cast<int>(w.branch_sets.size()) != pattern.order()) return false;
  VertexSet seen = 0;
  for (VertexSet s : w.branch_sets) {
    if (s == 0 || (s & seen) || (s & ~g.vertices())) return false;
    if (!is_connected_set(g, s)) return false;
    seen |= s;
  }
  for (const auto& e : pattern.edges()) {
    if (!(neighborhood_of(g, w.branch_sets[e.u]) & w.branch_sets[e.v])) return false;
  }
  return true;
}

std::optional<MinorWitness> find_minor(const Graph& g, const Graph& pattern, SearchBudget& budget) {
  if (!is_connected(pattern)) throw GraphError("minor pattern must be connected");
  budget.charge(2);
  if (pattern.order() == 0) return MinorWitness{};
  if (pattern.order() > g.order() || pattern.size() > g.size()) return std::nullopt;
  for (VertexSet comp : components(g)) {
    if (popcount(comp) < pattern.order()) continue;
    if (auto w = PartitionSearch(g, comp, pattern, budget).run()) return w;
  }
  return std::nullopt;
}

std::optional<MinorWitness> has_complete_minor(const Graph& g, int t, SearchBudget& budget) {
  if (t < 0) throw GraphError("negative minor order");
  if (static_cast<long>(t) * (t - 1) / 2 > g.size()) {
    budget.charge(2);
    return std::nullopt;
  }
  return find_minor(g, Graph::complete(t), budget);
}

std::optional<MinorWitness> has_complete_minor(const Graph& g, int t) {
  SearchBudget budget(default_budget(), "complete minor");
  return has_complete_minor(g, t, budget);
}

namespace {

// Spanning-tree contractions of each branch set, in current ids.
std::vector<EdgeRef> contraction_sequence(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<EdgeRef> tree;
  for (VertexSet s : sets) {
    const Vertex root = lowest(s);
    VertexSet seen = bit(root);
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex u : members(g.neighbors(queue[i]) & s & ~seen)) {
        seen |= bit(u);
        queue.push_back(u);
        tree.push_back(EdgeRef::of(queue[i], u));
      }
    }
  }
  std::vector<EdgeRef> out;
  Graph cur = g;
  VertexMap where{std::vector<Vertex>(g.order())};
  std::iota(where.target.begin(), where.target.end(), 0);
  for (const auto& e : tree) {
    const EdgeRef now = EdgeRef::of(where(e.u), where(e.v));
    out.push_back(now);
    Contraction c = contract_edge(cur, now);
    cur = std::move(c.graph);
    where = where.then(c.map);
  }
  return out;
}

}  // namespace

Graph apply_contractions(const Graph& g, const std::vector<EdgeRef>& sequence) {
  Graph cur = g;
  for (const auto& e : sequence) cur = contract_edge(cur, e).graph;
  return cur;
}

HadwigerResult hadwiger_number(const Graph& g, SearchBudget& budget) {
  budget.charge(2);
  HadwigerResult out;
  if (g.order() == 0) return out;
  const auto comps = components(g);
  for (VertexSet comp : comps) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    int t = 1;
    MinorWitness best{{sub.graph.vertices()}};
    while (true) {
      auto w = has_complete_minor(sub.graph, t + 1, budget);
      if (!w) break;
      ++t;
      best = std::move(*w);
    }
    if (t <= out.t) continue;
    out.t = t;
    out.witness.branch_sets.clear();
    for (VertexSet s : best.branch_sets) {
      VertexSet host = 0;
      for (Vertex v : members(s)) host |= bit(sub.origin[v]);
      out.witness.branch_sets.push_back(host);
    }
  }
  if (comps.size() == 1) {
    // Leftover vertices join an adjacent branch set so that only edge
    // contractions are needed.
    std::vector<VertexSet> sets = out.witness.branch_sets;
    VertexSet covered = 0;
    for (VertexSet s : sets) covered |= s;
    while (covered != g.vertices()) {
      for (auto& s : sets) {
        const VertexSet add = neighborhood_of(g, s) & ~covered;
        if (add) {
          const VertexSet one = bit(lowest(add));
          s |= one;
          covered |= one;
          break;
        }
      }
    }
    out.contraction_sequence = contraction_sequence(g, sets);
  }
  return out;
}

HadwigerResult hadwiger_number(const Graph& g) {
  SearchBudget budget(default_budget(), "hadwiger number");
  return hadwiger_number(g, budget);
}

bool is_planar_small(const Graph& g, SearchBudget& budget) {
  budget.charge(2);
  if (g.order() <= 4) return true;
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
  if (find_minor(g, Graph::complete(5), budget)) return false;
  return !find_minor(g, Graph::complete_bipartite(3, 3), budget);
}

bool is_planar_small(const Graph& g) {
  SearchBudget budget(default_budget(), "planarity");
  return is_planar_small(g, budget);
}

}  // namespace beth
