#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "distk/enumeration.hpp"
#include "distk/families.hpp"
#include "distk/graph.hpp"

namespace distk {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kSearchReportSchema = "distk.search-report/1";
inline constexpr const char* kCheckpointSchema = "distk.checkpoint/1";

enum class Scope { Connected, All };

std::string to_string(Scope s);
Scope scope_from_string(const std::string& s);

struct SearchTask {
  int n = 0;
  int k = 2;
  /// Only graphs with clique number of G_k at most this are scanned.
  std::optional<int> clique_cap;
  Scope scope = Scope::Connected;
  /// graph6 file to scan instead of the internal generator; taken as is
  /// (scope is ignored, no composition).
  std::string external_path;
  int shards = 1;
  int threads = 1;
  /// Prefix for per-shard checkpoint files; empty disables checkpointing.
  std::string checkpoint_path;
  std::int64_t checkpoint_every = 1'000'000;
  /// Witness sets keep the lexicographically smallest canonical forms up to
  /// this many; witness_count stays exact.
  std::size_t witness_limit = 10'000;
  /// Witnesses beyond this many are reported without classification.
  std::size_t classify_limit = 1'000;

  void validate() const;
};

/// Sorted set of canonical graph6 strings, truncated to the smallest `limit`.
struct WitnessSet {
  std::set<std::string> forms;
  std::size_t limit = 10'000;
  bool truncated = false;

  void insert(std::string form);
  void merge(const WitnessSet& other);
};

/// Result of scanning one stream (one shard, one order).
struct PartialScan {
  std::int64_t scanned = 0;
  std::int64_t passing = 0;
  /// -1 while no graph has passed the cap filter.
  long max_e_gk = -1;
  std::int64_t witness_count = 0;
  WitnessSet witnesses;

  void merge(const PartialScan& other);
};

struct WitnessClassification {
  std::string form;
  /// Empty when the double broom is undefined (k < 3 or n <= k).
  std::optional<bool> double_broom_k_isomorphic;
  /// First broom spec (sweep order) whose G_k is isomorphic to the witness's.
  std::optional<BroomSpec> k_isomorphic_broom;
  /// Broom spec isomorphic to the witness itself.
  std::optional<BroomSpec> isomorphic_broom;
};

struct ShardProvenance {
  int order = 0;
  int index = 0;
  int total = 1;
  std::int64_t scanned = 0;
  bool resumed = false;
};

struct SearchReport {
  SearchTask task;
  std::int64_t graphs_scanned = 0;
  std::int64_t graphs_passing = 0;
  long max_e_gk = -1;
  std::int64_t witness_count = 0;
  std::vector<std::string> witnesses;
  bool witnesses_truncated = false;
  std::vector<WitnessClassification> classification;
  /// For scope All: the best value among connected graphs of order n, and the
  /// best among disconnected ones (-1 if none qualifies).
  std::optional<long> connected_max;
  std::optional<long> disconnected_max;
  double elapsed_seconds = 0.0;
  std::vector<ShardProvenance> shards;
};

/// Scans one stream; the hot loop behind every search.
PartialScan scan_stream(GraphStream& stream, int k, std::optional<int> clique_cap, std::size_t witness_limit);

/// Maximum e(G_k) over the task's graphs with every maximizer. Scope All
/// scans connected graphs of every order up to n and composes.
SearchReport max_k_distances(const SearchTask& task);

/// best(m) = max(best_connected(m), max over 1 <= a <= m/2 of
/// best(a) + best(m - a)), using additivity of e(G_k) over components.
/// best_connected[m] for m = 1..n (index 0 ignored); -1 marks an order with no
/// admissible graph. Throws InvalidArgument on a short table.
long compose_disconnected_max(const std::vector<long>& best_connected, int n);

/// Connected reports for orders 1..n_max (index 0 unused), same k and cap.
std::vector<SearchReport> connected_table(const SearchTask& base, int n_max);

/// Scope-All report for order n from a connected table covering 1..n.
SearchReport compose_report(const SearchTask& task, const std::vector<SearchReport>& table);

/// Fills report.classification for the first classify_limit witnesses.
void classify_witnesses(SearchReport& report);

struct ReverifyResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-parses every witness and checks it reproduces max_e_gk and the cap.
ReverifyResult reverify_witnesses(const SearchReport& report);

nlohmann::json to_json(const SearchTask& task);
SearchTask search_task_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SearchReport& report);
SearchReport search_report_from_json(const nlohmann::json& j);

/// One CSV row per report: n,k,cap,scope,graphs_scanned,max_e_gk,witness_count.
std::string csv_header();
std::string csv_row(const SearchReport& report);

}  // namespace distk
