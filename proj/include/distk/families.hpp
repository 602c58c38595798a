#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distk/graph.hpp"

namespace distk {

/// Parameters of a t-broom: target distance k and the leaf count of each of
/// the t >= 2 brooms.
struct BroomSpec {
  int k = 3;
  std::vector<int> leaf_counts;

  int brooms() const { return static_cast<int>(leaf_counts.size()); }
  /// Vertices on each handle, not counting the hub.
  int handle_length() const { return k % 2 == 0 ? (k - 2) / 2 : (k - 3) / 2; }
  int hub_count() const { return k % 2 == 0 ? 1 : brooms(); }
  int order() const;
  void validate() const;
  std::string to_string() const;

  bool operator==(const BroomSpec&) const = default;
};

/// Vertex numbering: hub(s) first, then handle vertices broom by broom
/// (nearest the hub first), then leaves broom by broom.
///
/// Even k: one hub, each handle a path of (k - 2)/2 vertices hanging off it.
/// Odd k: the hubs form K_t and each carries a handle of (k - 3)/2 vertices;
/// for k = 3 the leaves hang directly off the hubs. Either way, leaves in
/// different brooms are exactly k apart.
Graph t_broom(const BroomSpec& spec);

/// Pairs of leaves in distinct brooms: sum over i < j of a_i * a_j.
long t_broom_distance_count(const BroomSpec& spec);

/// Path on k - 1 vertices (0..k-2) with ceil((n-k+1)/2) leaves on vertex 0
/// and floor((n-k+1)/2) on vertex k-2.
Graph double_broom(int n, int k);

/// floor((n - k + 1)^2 / 4).
long double_broom_count(int n, int k);

/// Two cliques on (n + 1)/2 vertices sharing z = 0, with x = 1 and
/// y = (n + 1)/2 detached from z and joined to each other. Its G_2 is a
/// complete bipartite graph with one edge subdivided.
Graph glued_cliques(int n);

Graph star(int n);
Graph path(int n);
Graph cycle(int n);

struct BroomWidth {
  double value = 0.0;
  std::vector<int> candidates;
};

/// For even k: x = 1/4 + sqrt(1/16 + (n - 1)/(k - 2)) together with the
/// integers t >= 2 in [x - 1, x + 1]. Odd k is rejected; there t = 2.
BroomWidth optimal_broom_width(int n, int k);

inline constexpr int kOddBroomWidth = 2;

/// Exact test of |t - x| <= 1 for the even-k width formula, in integers.
bool width_within_one(int n, int k, int t);

/// Every broom spec on exactly n vertices for distance k, leaf counts
/// non-increasing, ordered by t then lexicographically descending leaves.
std::vector<BroomSpec> broom_specs_of_order(int n, int k);

/// Spec with the most k-distances among broom_specs_of_order(n, k), first in
/// that order on ties; empty when no broom has n vertices.
std::optional<BroomSpec> best_broom(int n, int k);

}  // namespace distk
