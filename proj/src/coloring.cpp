#include <algorithm>
#include <numeric>

#include "beth/oracles.hpp"

namespace beth {

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(k), 0);
  for (std::size_t v = 0; v < color.size(); ++v) out.at(static_cast<std::size_t>(color[v])) |= bit(static_cast<Vertex>(v));
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order()) return false;
  for (int col : c.color) {
    if (col < 0 || col >= c.k) return false;
  }
  for (const auto& e : g.edges()) {
    if (c.color[e.u] == c.color[e.v]) return false;
  }
  return true;
}

namespace {

class ColorSearch {
 public:
  ColorSearch(const Graph& g, int k, SearchBudget& budget) : g_(g), k_(k), budget_(budget) {
    const int n = g.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    color_.assign(n, -1);
    domain_.assign(n, k >= 32 ? ~0u : (1u << k) - 1);
  }

  // Calls visit(color) for each colouring in branch order with colours used
  // in first-appearance order; stops when visit returns false.
  template <class Visit>
  void run(Visit&& visit) {
    budget_.charge();
    if (g_.order() == 0) {
      visit(color_);
      return;
    }
    if (k_ <= 0) return;
    stop_ = false;
    rec(0, 0, visit);
  }

 private:
  template <class Visit>
  void rec(std::size_t idx, int used, Visit& visit) {
    budget_.charge();
    if (idx == order_.size()) {
      if (!visit(color_)) stop_ = true;
      return;
    }
    const Vertex v = order_[idx];
    const int top = std::min(used + 1, k_);
    for (int c = 0; c < top && !stop_; ++c) {
      if (!(domain_[v] >> c & 1u)) continue;
      color_[v] = c;
      std::vector<Vertex> pruned;
      bool wiped = false;
      for (Vertex u : members(g_.neighbors(v))) {
        if (color_[u] >= 0 || !(domain_[u] >> c & 1u)) continue;
        domain_[u] &= ~(1u << c);
        pruned.push_back(u);
        if (domain_[u] == 0) wiped = true;
      }
      if (!wiped) rec(idx + 1, std::max(used, c + 1), visit);
      for (Vertex u : pruned) domain_[u] |= 1u << c;
      color_[v] = -1;
    }
  }

  const Graph& g_;
  int k_;
  SearchBudget& budget_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<unsigned> domain_;
  bool stop_ = false;
};

void check_order(const Graph& g) {
  if (g.order() > 32) throw GraphError("colouring search supports at most 32 vertices");
}

}  // namespace

bool is_colorable(const Graph& g, int k, SearchBudget& budget) {
  check_order(g);
  budget.charge(2);
  bool found = false;
  ColorSearch(g, k, budget).run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

Coloring chromatic_number(const Graph& g, SearchBudget& budget) {
  check_order(g);
  budget.charge(2);
  Coloring out;
  if (g.order() == 0) return out;
  for (int k = 1; k <= g.order(); ++k) {
    bool found = false;
    ColorSearch(g, k, budget).run([&](const std::vector<int>& col) {
      out.color = col;
      found = true;
      return false;
    });
    if (found) {
      out.k = *std::max_element(out.color.begin(), out.color.end()) + 1;
      return out;
    }
  }
  throw GraphError("no colouring found");  // unreachable: n colours always suffice
}

Coloring chromatic_number(const Graph& g) {
  SearchBudget budget(default_budget(), "chromatic number");
  return chromatic_number(g, budget);
}

std::vector<Coloring> optimal_colorings(const Graph& g, std::size_t limit, SearchBudget& budget) {
  const Coloring best = chromatic_number(g, budget);
  std::vector<Coloring> out;
  if (limit == 0) return out;
  ColorSearch(g, best.k, budget).run([&](const std::vector<int>& col) {
    out.push_back(Coloring{col, best.k});
    return out.size() < limit;
  });
  return out;
}

}  // namespace beth
