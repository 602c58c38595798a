#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "distk/graph.hpp"

namespace distk {

enum class TreeMode { Auto, Exhaustive, Sampled };

std::string to_string(TreeMode m);

struct SpanningTreeOptions {
  /// Exhaustive iteration when the tree count is at most this.
  std::int64_t exhaustive_cap = 1'000'000;
  int samples = 10'000;
  std::uint64_t seed = 0x5eed;
};

/// Kirchhoff's matrix-tree count (exact, Bareiss elimination).
boost::multiprecision::cpp_int spanning_tree_count(const Graph& g);

/// Calls visit(tree) for every spanning tree, by include/exclude branching on
/// the edge list. Stops early if visit returns false.
void for_each_spanning_tree(const Graph& g, const std::function<bool(const Graph&)>& visit);

/// Uniformly random spanning tree of a connected graph (Wilson's algorithm).
Graph random_spanning_tree(const Graph& g, std::mt19937_64& rng);

/// Vertex count of a longest path in a tree.
int tree_longest_path_size(const Graph& tree);

/// Histogram of longest-path vertex counts over the spanning trees of g,
/// keeping the first tree seen for every length.
struct TreePathProfile {
  TreeMode mode = TreeMode::Exhaustive;
  std::int64_t trees = 0;
  std::map<int, std::int64_t> count_by_length;
  std::map<int, Graph> example_by_length;
};

TreePathProfile spanning_tree_path_profile(const Graph& g, TreeMode mode = TreeMode::Auto,
                                           const SpanningTreeOptions& options = {});

}  // namespace distk
