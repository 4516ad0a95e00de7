#include "beth/graph.hpp"

#include <string>

#include "beth/errors.hpp"

namespace beth {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet make_set(const std::vector<Vertex>& vs) {
  VertexSet s = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw GraphError("vertex id out of range: " + std::to_string(v));
    s |= bit(v);
  }
  return s;
}

EdgeRef EdgeRef::of(Vertex a, Vertex b) {
  if (a == b) throw GraphError("edge endpoints must differ");
  return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
}

VertexMap VertexMap::then(const VertexMap& next) const {
  VertexMap out;
  out.target.reserve(target.size());
  for (Vertex t : target) out.target.push_back(next(t));
  return out;
}

VertexSet VertexMap::image(VertexSet s) const {
  VertexSet out = 0;
  for (; s != 0; s &= s - 1) out |= bit(target.at(lowest(s)));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count out of range: " + std::to_string(n));
  }
  adj_.assign(n, 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.adj_[v] = full_set(n) & ~bit(v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = a; y < a + b; ++y) g.add_edge(x, y);
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<EdgeRef>& edges) {
  Graph g(n);
  for (const EdgeRef& e : edges) g.add_edge(e.u, e.v);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += popcount(row);
  return twice / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return (adj_[a] & bit(b)) != 0;
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : members(adj_[u] & ~full_set(u + 1))) out.push_back({u, v});
  }
  return out;
}

bool Graph::is_complete() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v] != (full_set(n_) & ~bit(v))) return false;
  }
  return true;
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  adj_[a] |= bit(b);
  adj_[b] |= bit(a);
}

void Graph::remove_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  adj_[a] &= ~bit(b);
  adj_[b] &= ~bit(a);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw GraphError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex id out of range: " + std::to_string(v));
}

}  // namespace beth
