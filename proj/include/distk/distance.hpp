#pragma once

#include <cstdint>
#include <vector>

#include "distk/graph.hpp"

namespace distk {

/// Distance between vertices in different components. Never compares equal to
/// a hop count, so "d(u, v) != k" is exact on disconnected graphs.
inline constexpr int kUnreachable = -1;

/// Hop distances between all vertex pairs.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(Vertex u, Vertex v, int d) { d_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(d); }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }

  /// Vertices at distance exactly k from v.
  VertexSet sphere(Vertex v, int k) const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Vertices at hop distance exactly k from source (k >= 0).
VertexSet distance_sphere(const Graph& g, Vertex source, int k);

/// G_k: same vertex set, {x, y} an edge iff d(x, y) == k.
Graph distance_k_graph(const Graph& g, int k);

/// e(G_k), the number of unordered pairs at distance exactly k.
int k_distance_count(const Graph& g, int k);

/// Number of vertices at distance exactly k from v.
int k_degree(const Graph& g, int k, Vertex v);

/// Largest finite distance, or kUnreachable for a disconnected graph.
int diameter(const Graph& g);

/// Edge counts of G_1, ..., G_diam for a connected graph, indexed by distance
/// (index 0 unused).
std::vector<int> distance_profile(const Graph& g);

}  // namespace distk
