#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distk {

using Vertex = int;
using VertexSet = std::uint64_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : (bit(n) - 1); }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for every vertex in s, in increasing order.
template <class F>
inline void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    f(lowest(s));
    s &= s - 1;
  }
}

std::vector<Vertex> to_vector(VertexSet s);

/// Undirected simple graph on at most 64 vertices. Row v of the adjacency is a
/// 64-bit set holding the neighbourhood of v.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  VertexSet vertices() const { return low_bits(n_); }
  VertexSet neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  /// Replaces the neighbourhood of v; callers must keep the rows symmetric.
  void set_row(Vertex v, VertexSet row) { adj_[v] = row; }

  /// Appends a vertex adjacent to `nbrs` and returns its id.
  Vertex add_vertex(VertexSet nbrs = 0);

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Graph whose vertex perm[v] corresponds to vertex v of this graph.
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph induced(VertexSet keep) const;
  /// Vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  /// Vertices reachable from v.
  VertexSet component(Vertex v) const;
  bool is_connected() const;
  /// Vertices whose removal disconnects the graph (or leaves it empty-connected).
  bool is_cut_vertex(Vertex v) const;

  /// Throws InvalidArgument if symmetry, loop-freeness or range fails.
  void validate() const;

  bool operator==(const Graph& o) const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

}  // namespace distk
