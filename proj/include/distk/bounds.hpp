#pragma once

#include <optional>
#include <string>

#include <boost/rational.hpp>
#include <json.hpp>

#include "distk/graph.hpp"

namespace distk {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// n(n - k + 1)/4, the bound on e(G_k) when G_k is triangle-free.
Rational mantel_k_bound(int n, int k);

/// (n - r)(n - k + 1)/4 when at least r vertices have no k-neighbours.
Rational interior_refined_bound(int n, int k, int r);

struct UnaffiliatedBound {
  /// (n - r)(n - p)/4
  Rational value;
  /// (n - (r + p)/2)^2 / 4, never smaller than `value`.
  Rational midpoint;
};

/// Bound for r interior vertices and p vertices unaffiliated with every
/// k-distance pair.
UnaffiliatedBound unaffiliated_bound(int n, int r, int p);

/// C(n - 1, 2), the maximum of e(G_2); attained only by the star.
long star_bound(int n);

/// Checks C(n, 2) = e(G) + e(G_2) + ... + e(G_diam). Throws DisconnectedGraph.
bool edge_decomposition_check(const Graph& g);

/// A bound value with its verdict; `satisfied` is empty when the bound's
/// hypothesis does not hold for the graph.
struct BoundCheck {
  Rational value;
  std::optional<bool> satisfied;
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  int k = 0;
  long e_gk = 0;
  bool gk_triangle_free = false;
  /// Number of interior vertices.
  int r = 0;
  /// Fewest vertices unaffiliated with a k-distance pair; empty when G_k has
  /// no edges.
  std::optional<int> p;
  std::optional<BoundCheck> mantel;
  std::optional<BoundCheck> interior;
  std::optional<BoundCheck> unaffiliated;
  std::optional<Rational> unaffiliated_midpoint;
  /// Only for k = 2 and n >= 3.
  std::optional<BoundCheck> star;

  /// True unless some applicable bound is violated.
  bool all_satisfied() const;
};

BoundReport evaluate_bounds(const Graph& g, int k);

nlohmann::json to_json(const BoundReport& report);

}  // namespace distk
