#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace beth {

using Vertex = int;

// Vertex subsets are bitmasks; bit i is vertex i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr Vertex lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

std::vector<Vertex> members(VertexSet s);
VertexSet make_set(const std::vector<Vertex>& vs);

// Normalized edge: u < v.
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;

  static EdgeRef of(Vertex a, Vertex b);
  auto operator<=>(const EdgeRef&) const = default;
};

// Where each source vertex ended up after a contraction-like operation.
struct VertexMap {
  std::vector<Vertex> target;

  Vertex operator()(Vertex v) const { return target.at(v); }
  int source_order() const { return static_cast<int>(target.size()); }
  // Composition: apply *this, then `next`.
  VertexMap then(const VertexMap& next) const;
  VertexSet image(VertexSet s) const;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph empty(int n) { return Graph(n); }
  static Graph complete_bipartite(int a, int b);
  static Graph from_edges(int n, const std::vector<EdgeRef>& edges);

  int order() const { return n_; }
  int size() const;
  bool has_edge(Vertex a, Vertex b) const;
  VertexSet neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return popcount(adj_.at(v)); }
  VertexSet vertices() const { return full_set(n_); }
  std::vector<EdgeRef> edges() const;
  bool is_complete() const;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  // Optional display labels; empty when the graph carries none.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

}  // namespace beth
