#include "distk/graph.hpp"

#include <string>

namespace distk {

std::vector<Vertex> to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Vertex Graph::add_vertex(VertexSet nbrs) {
  if (n_ >= kMaxVertices) throw InvalidArgument("graph already has 64 vertices");
  if (nbrs & ~low_bits(n_)) throw InvalidArgument("neighbour set refers to missing vertices");
  const Vertex v = n_++;
  adj_[v] = nbrs;
  for_each_vertex(nbrs, [&](Vertex u) { adj_[u] |= bit(v); });
  return v;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size mismatch");
  Graph h;
  h.n_ = n_;
  for (Vertex v = 0; v < n_; ++v) {
    VertexSet row = 0;
    for_each_vertex(adj_[v], [&](Vertex u) { row |= bit(perm[u]); });
    h.adj_[perm[v]] = row;
  }
  return h;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  if (keep == 0) throw InvalidArgument("induced subgraph on empty vertex set");
  std::array<Vertex, kMaxVertices> index{};
  int m = 0;
  for_each_vertex(keep, [&](Vertex v) { index[v] = m++; });
  Graph h(m);
  for_each_vertex(keep, [&](Vertex v) {
    VertexSet row = 0;
    for_each_vertex(adj_[v] & keep, [&](Vertex u) { row |= bit(index[u]); });
    h.adj_[index[v]] = row;
  });
  return h;
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (n_ + other.n_ > kMaxVertices) throw InvalidArgument("disjoint union exceeds 64 vertices");
  Graph h(n_ + other.n_);
  for (Vertex v = 0; v < n_; ++v) h.adj_[v] = adj_[v];
  for (Vertex v = 0; v < other.n_; ++v) h.adj_[n_ + v] = other.adj_[v] << n_;
  return h;
}

VertexSet Graph::component(Vertex v) const {
  check_vertex(v);
  VertexSet seen = bit(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= adj_[u]; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool Graph::is_connected() const { return n_ == 0 || component(0) == vertices(); }

bool Graph::is_cut_vertex(Vertex v) const {
  check_vertex(v);
  const VertexSet rest = vertices() & ~bit(v);
  if (rest == 0) return false;
  const Vertex start = lowest(rest);
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= adj_[u]; });
    frontier = next & rest & ~seen;
    seen |= frontier;
  }
  return seen != rest;
}

void Graph::validate() const {
  if (n_ < 1 || n_ > kMaxVertices) throw InvalidArgument("graph order out of range");
  const VertexSet all = vertices();
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v] & ~all) throw InvalidArgument("adjacency bit beyond vertex count");
    if (adj_[v] & bit(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
    for_each_vertex(adj_[v], [&](Vertex u) {
      if (!has_edge(u, v)) throw InvalidArgument("asymmetric adjacency");
    });
  }
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v] != o.adj_[v]) return false;
  }
  return true;
}

}  // namespace distk
