#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "distk/search.hpp"
#include "distk/spanning_trees.hpp"

namespace distk {

inline constexpr const char* kConjectureReportSchema = "distk.conjecture-report/1";

/// One parameter point of a verification grid.
struct ConjectureCell {
  nlohmann::json parameters;
  long observed = -1;
  /// Exact predicted value or bound, as text ("6", "37/4").
  std::string predicted;
  bool match = false;
  /// False for points the claim does not cover (reported, not judged).
  bool in_scope = true;
  std::string note;
  nlohmann::json witness_summary;
  /// graph6 lines of graphs contradicting the claim at this point.
  std::vector<std::string> counterexamples;
};

struct ConjectureReport {
  std::string claim;
  nlohmann::json grid;
  std::vector<ConjectureCell> cells;

  /// "consistent" iff every in-scope cell matches.
  std::string verdict() const;
  bool consistent() const;
};

struct VerifyOptions {
  int shards = 1;
  int threads = 1;
  std::size_t witness_limit = 10'000;
  std::string checkpoint_path;
};

/// No three vertices pairwise k apart: max e(G_k) over all graphs of order n
/// against floor((n - k + 1)^2 / 4); when n - k + 1 is even (equality case) every maximizer must be k-isomorphic to the
/// double broom. Cells with k = 3, n < 8 are reported out of scope.
ConjectureReport verify_triangle_free_conjecture(int k, int n_lo, int n_hi, const VerifyOptions& opt = {});

/// Max e(G_2) over graphs with triangle-free G_2 against (n - 1)^2/4 + 1;
/// for odd n the glued-cliques graph must attain it.
ConjectureReport verify_k2_bound(int n_lo, int n_hi, const VerifyOptions& opt = {});

/// Over all free trees: the maximum of e(T_k) is attained by a t-broom, with
/// t = 2 for odd k and t within 1 of the width formula for even k. Points with
/// k >= n are skipped.
ConjectureReport verify_tree_theorem(int n_lo, int n_hi, int k_lo, int k_hi);

/// Max e(G_2) over all graphs equals C(n - 1, 2) and the star is the only
/// maximizer.
ConjectureReport verify_star_proposition(int n_lo, int n_hi, const VerifyOptions& opt = {});

/// Spanning-tree path lemma over every connected graph of each order, all
/// 1 <= k <= n - 1 and 2 <= r <= n - 1.
ConjectureReport verify_spanning_tree_lemma(int n_lo, int n_hi, const SpanningTreeOptions& options = {});

/// Over every connected graph of each order: the Mantel-type bound, the
/// interior refinement and the unaffiliated refinement whenever G_k is
/// triangle-free (2 <= k <= n - 1), plus the distance decomposition of C(n, 2).
ConjectureReport verify_bound_suite(int n_lo, int n_hi);

nlohmann::json to_json(const ConjectureReport& r);

}  // namespace distk
