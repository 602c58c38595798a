#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "distk/distance.hpp"
#include "distk/graph.hpp"
#include "distk/spanning_trees.hpp"

namespace distk {

class EmptyDistanceGraph : public Error {
 public:
  using Error::Error;
};

class UnreachablePair : public Error {
 public:
  using Error::Error;
};

/// Sequence of distinct vertices, consecutive ones adjacent. size() is the
/// vertex count |P|.
struct Path {
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  /// Throws InvalidArgument if the sequence is not a path of g.
  void validate(const Graph& g) const;

  bool operator==(const Path&) const = default;
};

/// True iff p is a shortest path between its endpoints.
bool is_geodesic(const DistanceMatrix& dm, const Path& p);

/// Rooted spanning tree of the root's component; parent[root] == root,
/// parent[v] == -1 outside the component.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<int> depth;

  int order() const { return static_cast<int>(parent.size()); }
  VertexSet members() const;
  /// The tree as an undirected graph on the same vertex ids.
  Graph as_graph() const;
};

/// Vertices with no k-neighbours.
VertexSet interior_vertices(const Graph& g, int k);

/// Vertices z with d(u, z) != k and d(v, z) != k.
VertexSet unaffiliated_vertices(const DistanceMatrix& dm, int k, Vertex u, Vertex v);
VertexSet unaffiliated_vertices(const Graph& g, int k, Vertex u, Vertex v);

/// Minimum of |unaffiliated_vertices| over all k-distances. Throws
/// EmptyDistanceGraph when there is none.
int min_unaffiliated(const Graph& g, int k);

/// Lexicographically least shortest u-v path. Throws UnreachablePair.
Path geodesic(const Graph& g, Vertex u, Vertex v);

/// BFS tree from root in which every vertex sits at depth d(root, w) and the
/// given geodesic (starting at root) is a tree path. Other vertices take the
/// least-id neighbour one level up as parent. Throws InvalidArgument if p is
/// not a geodesic starting at root.
RootedTree bfs_tree_containing(const Graph& g, Vertex root, const Path& p);

/// Longest path in the tree by double sweep: the least-id vertex farthest from
/// the root, then the least-id vertex farthest from that one.
Path longest_tree_path(const RootedTree& t);

/// Unique path between two vertices of a tree.
Path tree_path(const RootedTree& t, Vertex a, Vertex b);

/// Splits p at its vertex nearest the root (included in both halves). The
/// distance sequence must strictly decrease then strictly increase; otherwise
/// InvalidArgument.
std::pair<Path, Path> split_at_nearest(const Path& p, std::span<const int> dist_from_root);

struct LemmaVerdict {
  std::string graph_id;
  int k = 0;
  int r = 0;
  int interior_count = 0;
  /// False when g has more than r interior vertices; the claim is then vacuous.
  bool applicable = true;
  std::int64_t spanning_trees_checked = 0;
  TreeMode mode = TreeMode::Exhaustive;
  bool holds = true;
  /// Spanning tree violating the claim; present iff !holds.
  std::optional<Graph> witness;
};

/// Per spanning tree: either its longest path has fewer than r + 1 vertices
/// or some path has at least 2k - r vertices. Lengths are vertex counts.
/// Requires r >= 2 and n >= r + 1 (InvalidArgument otherwise).
LemmaVerdict spanning_tree_lemma_check(const Graph& g, int k, int r, TreeMode mode = TreeMode::Auto,
                                       const SpanningTreeOptions& options = {});

/// Same check against a precomputed profile of g's spanning trees.
LemmaVerdict spanning_tree_lemma_check(const Graph& g, int k, int r, const TreePathProfile& profile);

nlohmann::json to_json(const LemmaVerdict& v);

}  // namespace distk
