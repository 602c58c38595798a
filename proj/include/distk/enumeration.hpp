#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "distk/graph.hpp"

namespace distk {

/// Parameters outside what the internal generators support.
class EnvelopeError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxConnectedOrder = 12;
inline constexpr int kMaxTreeOrder = 18;
inline constexpr int kCursorVersion = 1;

/// Selects a deterministic subset of a stream: shard `index` of `total`.
struct Shard {
  int index = 0;
  int total = 1;

  void validate() const;
};

/// Single-consumer stream of graphs with a resumable cursor: a stream rebuilt
/// from cursor() yields exactly the remaining suffix.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<Graph> next() = 0;
  virtual nlohmann::json cursor() const = 0;
  /// Graphs returned so far, counting those before a resume.
  virtual std::int64_t emitted() const = 0;
};

/// One connected graph per isomorphism class on n vertices, by canonical
/// augmentation: children add a vertex adjacent to a nonempty subset, and a
/// child is kept iff its new vertex lies in the orbit of the child's
/// canonical deletion vertex (a non-cut vertex of maximal degree signature,
/// ties broken by canonical label). Siblings are deduplicated by canonical
/// form.
///
/// Sharding splits at level max(1, n - 3): the k-th graph generated at that
/// level (in DFS order, counting all shards) belongs to shard k mod total.
class ConnectedGraphStream : public GraphStream {
 public:
  explicit ConnectedGraphStream(int n, Shard shard = {});
  static std::unique_ptr<ConnectedGraphStream> resume(const nlohmann::json& cursor);

  std::optional<Graph> next() override;
  nlohmann::json cursor() const override;
  std::int64_t emitted() const override { return emitted_; }

  int order() const { return n_; }
  int split_level() const { return split_level_; }

 private:
  struct Frame {
    Graph g;
    std::uint64_t next_subset = 0;
    std::unordered_set<std::string> seen;
  };

  /// Returns the child's canonical graph6 when it passes the canonical
  /// deletion test.
  static std::optional<std::string> accept(const Graph& child);
  void replay(Frame& f, std::uint64_t upto) const;

  int n_;
  Shard shard_;
  int split_level_;
  std::vector<Frame> stack_;
  std::int64_t split_counter_ = 0;
  std::int64_t emitted_ = 0;
  bool single_pending_ = false;
};

/// Every free tree on n vertices once, by the constant-amortized-time
/// successor on canonical level sequences (Wright, Richmond, Odlyzko and
/// McKay). Sharding takes every total-th tree.
class FreeTreeStream : public GraphStream {
 public:
  explicit FreeTreeStream(int n, Shard shard = {});
  static std::unique_ptr<FreeTreeStream> resume(const nlohmann::json& cursor);

  std::optional<Graph> next() override;
  nlohmann::json cursor() const override;
  std::int64_t emitted() const override { return emitted_; }

  /// Level sequence (depths in preorder) to tree.
  static Graph from_levels(const std::vector<int>& levels);

 private:
  int n_;
  Shard shard_;
  std::optional<std::vector<int>> pending_;
  std::int64_t index_ = 0;
  std::int64_t emitted_ = 0;
};

/// Line-delimited graph6 reader. Blank lines are skipped; an optional
/// ">>graph6<<" header is accepted. No deduplication. Malformed lines raise
/// Graph6Error naming the line number.
class Graph6Stream : public GraphStream {
 public:
  /// Reads from a file, skipping `skip_lines` lines first.
  explicit Graph6Stream(const std::string& path, std::int64_t skip_lines = 0);
  /// Reads from a caller-owned stream.
  explicit Graph6Stream(std::istream& in);
  static std::unique_ptr<Graph6Stream> resume(const nlohmann::json& cursor);

  std::optional<Graph> next() override;
  nlohmann::json cursor() const override;
  std::int64_t emitted() const override { return emitted_; }

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_;
  std::int64_t line_ = 0;
  std::int64_t emitted_ = 0;
};

std::unique_ptr<ConnectedGraphStream> connected_graphs(int n, Shard shard = {});
std::unique_ptr<FreeTreeStream> free_trees(int n, Shard shard = {});
std::unique_ptr<Graph6Stream> read_graph6_stream(const std::string& path);

/// Rebuilds any stream from its cursor.
std::unique_ptr<GraphStream> resume_stream(const nlohmann::json& cursor);

/// Drains a stream into a vector.
std::vector<Graph> collect(GraphStream& stream);

}  // namespace distk
