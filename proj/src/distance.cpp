#include "distk/distance.hpp"

#include <string>

namespace distk {

namespace {

void require_positive_k(int k) {
  if (k < 1) throw InvalidArgument("distance k must be positive, got " + std::to_string(k));
}

}  // namespace

VertexSet DistanceMatrix::sphere(Vertex v, int k) const {
  VertexSet s = 0;
  for (Vertex u = 0; u < n_; ++u) {
    if (at(v, u) == k) s |= bit(u);
  }
  return s;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  for (Vertex s = 0; s < n; ++s) {
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (frontier) {
      for_each_vertex(frontier, [&](Vertex v) { dm.set(s, v, depth); });
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbours(v); });
      frontier = next & ~seen;
      seen |= frontier;
      ++depth;
    }
  }
  return dm;
}

VertexSet distance_sphere(const Graph& g, Vertex source, int k) {
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  for (int depth = 0; depth < k && frontier; ++depth) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbours(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return frontier;
}

Graph distance_k_graph(const Graph& g, int k) {
  require_positive_k(k);
  Graph gk(g.order());
  for (Vertex v = 0; v < g.order(); ++v) gk.set_row(v, distance_sphere(g, v, k));
  return gk;
}

int k_distance_count(const Graph& g, int k) {
  require_positive_k(k);
  int twice = 0;
  for (Vertex v = 0; v < g.order(); ++v) twice += popcount(distance_sphere(g, v, k));
  return twice / 2;
}

int k_degree(const Graph& g, int k, Vertex v) {
  require_positive_k(k);
  if (v < 0 || v >= g.order()) throw InvalidArgument("vertex out of range");
  return popcount(distance_sphere(g, v, k));
}

int diameter(const Graph& g) {
  int diam = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    int depth = 0;
    for (;;) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbours(v); });
      frontier = next & ~seen;
      if (!frontier) break;
      seen |= frontier;
      ++depth;
    }
    if (seen != g.vertices()) return kUnreachable;
    if (depth > diam) diam = depth;
  }
  return diam;
}

std::vector<int> distance_profile(const Graph& g) {
  const int diam = diameter(g);
  if (diam == kUnreachable) throw InvalidArgument("distance profile needs a connected graph");
  std::vector<int> profile(diam + 1, 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    for (int depth = 1; depth <= diam; ++depth) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbours(v); });
      frontier = next & ~seen;
      seen |= frontier;
      profile[depth] += popcount(frontier);
    }
  }
  for (int& c : profile) c /= 2;
  return profile;
}

}  // namespace distk
