#include "distk/spanning_trees.hpp"

#include <array>
#include <numeric>
#include <vector>

namespace distk {

using boost::multiprecision::cpp_int;

std::string to_string(TreeMode m) {
  switch (m) {
    case TreeMode::Auto:
      return "auto";
    case TreeMode::Exhaustive:
      return "exhaustive";
    case TreeMode::Sampled:
      return "sampled";
  }
  return "?";
}

cpp_int spanning_tree_count(const Graph& g) {
  const int m = g.order() - 1;
  if (m <= 0) return 1;
  // Laplacian with row and column 0 removed.
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
  for (int i = 0; i < m; ++i) {
    a[i][i] = g.degree(i + 1);
    for (int j = 0; j < m; ++j) {
      if (i != j && g.has_edge(i + 1, j + 1)) a[i][j] = -1;
    }
  }
  // Bareiss fraction-free elimination; every division is exact.
  cpp_int prev = 1;
  int sign = 1;
  for (int c = 0; c < m; ++c) {
    if (a[c][c] == 0) {
      int swap = -1;
      for (int r = c + 1; r < m; ++r) {
        if (a[r][c] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[c], a[swap]);
      sign = -sign;
    }
    for (int r = c + 1; r < m; ++r) {
      for (int j = c + 1; j < m; ++j) {
        a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[m - 1][m - 1];
}

namespace {

struct UnionFind {
  std::array<std::int8_t, Graph::kMaxVertices> parent;
  int components;

  explicit UnionFind(int n) : components(n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::int8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = static_cast<std::int8_t>(b);
    --components;
    return true;
  }
};

class TreeWalker {
 public:
  TreeWalker(const Graph& g, const std::function<bool(const Graph&)>& visit)
      : n_(g.order()), edges_(g.edges()), visit_(visit), tree_(g.order()) {}

  void run() {
    UnionFind uf(n_);
    if (n_ == 1) {
      visit_(tree_);
      return;
    }
    // Reject disconnected inputs up front.
    UnionFind all(n_);
    for (auto [u, v] : edges_) all.unite(u, v);
    if (all.components != 1) return;
    recurse(0, uf);
  }

 private:
  // Returns false once the visitor asks to stop.
  bool recurse(std::size_t idx, UnionFind uf) {
    if (uf.components == 1) return visit_(tree_);
    if (idx == edges_.size()) return true;
    const auto [u, v] = edges_[idx];
    // Include (contract) the edge.
    {
      UnionFind with = uf;
      if (with.unite(u, v)) {
        tree_.add_edge(u, v);
        const bool go_on = recurse(idx + 1, with);
        tree_.remove_edge(u, v);
        if (!go_on) return false;
      }
    }
    // Exclude (delete) the edge if the rest can still span.
    UnionFind rest = uf;
    for (std::size_t j = idx + 1; j < edges_.size() && rest.components > 1; ++j) {
      rest.unite(edges_[j].first, edges_[j].second);
    }
    if (rest.components == 1) return recurse(idx + 1, uf);
    return true;
  }

  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  const std::function<bool(const Graph&)>& visit_;
  Graph tree_;
};

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<bool(const Graph&)>& visit) {
  TreeWalker(g, visit).run();
}

Graph random_spanning_tree(const Graph& g, std::mt19937_64& rng) {
  if (!g.is_connected()) throw InvalidArgument("random spanning tree needs a connected graph");
  const int n = g.order();
  Graph tree(n);
  std::vector<Vertex> next(n, -1);
  std::vector<bool> in_tree(n, false);
  in_tree[0] = true;
  for (Vertex start = 1; start < n; ++start) {
    // Loop-erased random walk until the tree is hit; `next` keeps the last exit.
    Vertex u = start;
    while (!in_tree[u]) {
      const std::vector<Vertex> nbrs = to_vector(g.neighbours(u));
      std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
      next[u] = nbrs[pick(rng)];
      u = next[u];
    }
    for (u = start; !in_tree[u]; u = next[u]) {
      in_tree[u] = true;
      tree.add_edge(u, next[u]);
    }
  }
  return tree;
}

int tree_longest_path_size(const Graph& tree) {
  auto farthest = [&](Vertex s, int& ecc) {
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    VertexSet last = frontier;
    ecc = 0;
    for (;;) {
      VertexSet nxt = 0;
      for_each_vertex(frontier, [&](Vertex v) { nxt |= tree.neighbours(v); });
      frontier = nxt & ~seen;
      if (!frontier) break;
      seen |= frontier;
      last = frontier;
      ++ecc;
    }
    return lowest(last);
  };
  int ecc = 0;
  const Vertex a = farthest(0, ecc);
  farthest(a, ecc);
  return ecc + 1;
}

TreePathProfile spanning_tree_path_profile(const Graph& g, TreeMode mode, const SpanningTreeOptions& options) {
  TreePathProfile profile;
  if (mode == TreeMode::Auto) {
    mode = spanning_tree_count(g) <= options.exhaustive_cap ? TreeMode::Exhaustive : TreeMode::Sampled;
  }
  profile.mode = mode;
  auto record = [&](const Graph& tree) {
    const int len = tree_longest_path_size(tree);
    ++profile.trees;
    if (profile.count_by_length[len]++ == 0) profile.example_by_length.emplace(len, tree);
  };
  if (mode == TreeMode::Exhaustive) {
    for_each_spanning_tree(g, [&](const Graph& tree) {
      record(tree);
      return true;
    });
  } else if (g.is_connected()) {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.samples; ++i) record(random_spanning_tree(g, rng));
  }
  return profile;
}

}  // namespace distk
