#include "distk/structure.hpp"

#include <algorithm>
#include <limits>

#include "distk/canonical.hpp"
#include "distk/graph6.hpp"

namespace distk {

void Path::validate(const Graph& g) const {
  if (vertices.empty()) throw InvalidArgument("path has no vertices");
  VertexSet seen = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.order()) throw InvalidArgument("path vertex out of range");
    if (seen & bit(v)) throw InvalidArgument("path repeats vertex " + std::to_string(v));
    seen |= bit(v);
    if (i > 0 && !g.has_edge(vertices[i - 1], v)) {
      throw InvalidArgument("path step " + std::to_string(vertices[i - 1]) + "-" + std::to_string(v) +
                            " is not an edge");
    }
  }
}

bool is_geodesic(const DistanceMatrix& dm, const Path& p) {
  return dm.at(p.front(), p.back()) == p.size() - 1;
}

VertexSet RootedTree::members() const {
  VertexSet s = 0;
  for (Vertex v = 0; v < order(); ++v) {
    if (parent[v] >= 0) s |= bit(v);
  }
  return s;
}

Graph RootedTree::as_graph() const {
  Graph g(order());
  for (Vertex v = 0; v < order(); ++v) {
    if (parent[v] >= 0 && parent[v] != v) g.add_edge(v, parent[v]);
  }
  return g;
}

VertexSet interior_vertices(const Graph& g, int k) {
  VertexSet out = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (distance_sphere(g, v, k) == 0) out |= bit(v);
  }
  return out;
}

VertexSet unaffiliated_vertices(const DistanceMatrix& dm, int k, Vertex u, Vertex v) {
  VertexSet out = 0;
  for (Vertex z = 0; z < dm.order(); ++z) {
    if (dm.at(u, z) != k && dm.at(v, z) != k) out |= bit(z);
  }
  return out;
}

VertexSet unaffiliated_vertices(const Graph& g, int k, Vertex u, Vertex v) {
  return unaffiliated_vertices(all_pairs_distances(g), k, u, v);
}

int min_unaffiliated(const Graph& g, int k) {
  const DistanceMatrix dm = all_pairs_distances(g);
  int best = std::numeric_limits<int>::max();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (dm.at(u, v) == k) best = std::min(best, popcount(unaffiliated_vertices(dm, k, u, v)));
    }
  }
  if (best == std::numeric_limits<int>::max()) {
    throw EmptyDistanceGraph("no pair at distance " + std::to_string(k));
  }
  return best;
}

Path geodesic(const Graph& g, Vertex u, Vertex v) {
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.reachable(u, v)) {
    throw UnreachablePair("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not connected");
  }
  Path p{{u}};
  Vertex cur = u;
  while (cur != v) {
    const int want = dm.at(cur, v) - 1;
    VertexSet step = g.neighbours(cur);
    while (dm.at(lowest(step), v) != want) step &= step - 1;
    cur = lowest(step);
    p.vertices.push_back(cur);
  }
  return p;
}

RootedTree bfs_tree_containing(const Graph& g, Vertex root, const Path& p) {
  p.validate(g);
  if (p.front() != root) throw InvalidArgument("path must start at the BFS root");
  const DistanceMatrix dm = all_pairs_distances(g);
  for (int i = 0; i < p.size(); ++i) {
    if (dm.at(root, p.vertices[i]) != i) throw InvalidArgument("path is not a geodesic from the root");
  }
  const int n = g.order();
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.depth.assign(n, -1);
  for (Vertex w = 0; w < n; ++w) t.depth[w] = dm.at(root, w);
  t.parent[root] = root;
  for (int i = 1; i < p.size(); ++i) t.parent[p.vertices[i]] = p.vertices[i - 1];
  for (Vertex w = 0; w < n; ++w) {
    if (t.parent[w] >= 0 || t.depth[w] == kUnreachable) continue;
    VertexSet up = g.neighbours(w);
    while (dm.at(root, lowest(up)) != t.depth[w] - 1) up &= up - 1;
    t.parent[w] = lowest(up);
  }
  return t;
}

Path tree_path(const RootedTree& t, Vertex a, Vertex b) {
  if (t.parent[a] < 0 || t.parent[b] < 0) throw InvalidArgument("vertex not in tree");
  std::vector<Vertex> left{a};
  std::vector<Vertex> right{b};
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      a = t.parent[a];
      left.push_back(a);
    } else {
      b = t.parent[b];
      right.push_back(b);
    }
  }
  // a == b is the meeting vertex, present at the end of both lists.
  right.pop_back();
  left.insert(left.end(), right.rbegin(), right.rend());
  return Path{left};
}

Path longest_tree_path(const RootedTree& t) {
  const Graph tree = t.as_graph();
  auto farthest = [&](Vertex s) {
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    VertexSet last = frontier;
    for (;;) {
      VertexSet nxt = 0;
      for_each_vertex(frontier, [&](Vertex v) { nxt |= tree.neighbours(v); });
      frontier = nxt & ~seen;
      if (!frontier) break;
      seen |= frontier;
      last = frontier;
    }
    return lowest(last);
  };
  const Vertex a = farthest(t.root);
  const Vertex b = farthest(a);
  return tree_path(t, a, b);
}

std::pair<Path, Path> split_at_nearest(const Path& p, std::span<const int> dist_from_root) {
  if (p.vertices.empty()) throw InvalidArgument("cannot split an empty path");
  auto d = [&](int i) { return dist_from_root[p.vertices[i]]; };
  int z = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (d(i) < d(z)) z = i;
  }
  for (int i = 1; i < p.size(); ++i) {
    const bool ok = i <= z ? d(i) < d(i - 1) : d(i) > d(i - 1);
    if (!ok) throw InvalidArgument("distance from root along the path is not unimodal");
  }
  Path first{{p.vertices.begin(), p.vertices.begin() + z + 1}};
  Path second{{p.vertices.begin() + z, p.vertices.end()}};
  return {first, second};
}

namespace {

void check_lemma_args(const Graph& g, int k, int r) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (r < 2) throw InvalidArgument("spanning-tree lemma needs r >= 2");
  if (g.order() <= r) throw InvalidArgument("spanning-tree lemma needs n >= r + 1");
}

}  // namespace

LemmaVerdict spanning_tree_lemma_check(const Graph& g, int k, int r, const TreePathProfile& profile) {
  check_lemma_args(g, k, r);
  LemmaVerdict v;
  v.graph_id = canonical_form(g).bytes;
  v.k = k;
  v.r = r;
  v.interior_count = popcount(interior_vertices(g, k));
  v.applicable = v.interior_count <= r;
  v.mode = profile.mode;
  if (!v.applicable) return v;
  v.spanning_trees_checked = profile.trees;
  for (const auto& [len, count] : profile.count_by_length) {
    if (len >= r + 1 && len < 2 * k - r) {
      v.holds = false;
      v.witness = profile.example_by_length.at(len);
      break;
    }
  }
  return v;
}

LemmaVerdict spanning_tree_lemma_check(const Graph& g, int k, int r, TreeMode mode,
                                       const SpanningTreeOptions& options) {
  check_lemma_args(g, k, r);
  if (popcount(interior_vertices(g, k)) > r) {
    TreePathProfile none;
    none.mode = mode == TreeMode::Auto ? TreeMode::Exhaustive : mode;
    return spanning_tree_lemma_check(g, k, r, none);
  }
  return spanning_tree_lemma_check(g, k, r, spanning_tree_path_profile(g, mode, options));
}

nlohmann::json to_json(const LemmaVerdict& v) {
  nlohmann::json j{
      {"graph", v.graph_id},
      {"k", v.k},
      {"r", v.r},
      {"interior_count", v.interior_count},
      {"applicable", v.applicable},
      {"spanning_trees_checked", v.spanning_trees_checked},
      {"mode", to_string(v.mode)},
      {"holds", v.holds},
  };
  j["witness"] = v.witness ? nlohmann::json(to_graph6(*v.witness)) : nlohmann::json(nullptr);
  return j;
}

}  // namespace distk
