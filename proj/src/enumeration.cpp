#include "distk/enumeration.hpp"

#include <algorithm>
#include <array>

#include "distk/canonical.hpp"
#include "distk/graph6.hpp"

namespace distk {

void Shard::validate() const {
  if (total < 1) throw InvalidArgument("shard total must be positive");
  if (index < 0 || index >= total) throw InvalidArgument("shard index must be below shard total");
}

namespace {

void check_cursor(const nlohmann::json& c, const char* kind) {
  if (!c.is_object() || c.value("version", -1) != kCursorVersion) {
    throw CheckpointError("cursor version mismatch (expected " + std::to_string(kCursorVersion) + ")");
  }
  if (c.value("kind", std::string()) != kind) {
    throw CheckpointError(std::string("cursor is not a '") + kind + "' cursor");
  }
}

Shard shard_from(const nlohmann::json& c) {
  Shard s{c.at("shard").at(0).get<int>(), c.at("shard").at(1).get<int>()};
  s.validate();
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

ConnectedGraphStream::ConnectedGraphStream(int n, Shard shard)
    : n_(n), shard_(shard), split_level_(std::max(1, n - 3)) {
  shard_.validate();
  if (n < 1 || n > kMaxConnectedOrder) {
    throw EnvelopeError("internal connected-graph generator supports 1 <= n <= " +
                        std::to_string(kMaxConnectedOrder) + "; got n = " + std::to_string(n) +
                        ". Feed an external graph6 stream (e.g. from geng -c) instead.");
  }
  if (n == 1) {
    single_pending_ = shard_.index == 0;
    split_counter_ = 1;
  } else {
    stack_.push_back(Frame{Graph(1), 0, {}});
    if (split_level_ == 1) {
      // The root is the only level-1 graph; it belongs to shard 0.
      const bool mine = shard_.index == 0;
      split_counter_ = 1;
      if (!mine) stack_.clear();
    }
  }
}

std::optional<std::string> ConnectedGraphStream::accept(const Graph& child) {
  const int n = child.order();
  const Vertex added = n - 1;
  std::array<int, Graph::kMaxVertices> deg;
  for (Vertex x = 0; x < n; ++x) deg[x] = child.degree(x);
  auto signature = [&](Vertex x) {
    int s = 0;
    for_each_vertex(child.neighbours(x), [&](Vertex u) { s += deg[u]; });
    return (deg[x] << 12) | s;
  };
  const int mine = signature(added);
  VertexSet ties = 0;
  for (Vertex x = 0; x < added; ++x) {
    const int s = signature(x);
    if (s < mine) continue;
    if (child.is_cut_vertex(x)) continue;
    if (s > mine) return std::nullopt;
    ties |= bit(x);
  }
  CanonicalLabeling lab = canonical_labeling(child);
  std::string key = to_graph6(lab.graph);
  if (ties == 0) return key;
  Vertex chosen = added;
  for_each_vertex(ties, [&](Vertex x) {
    if (lab.position[x] > lab.position[chosen]) chosen = x;
  });
  if (chosen == added || same_orbit(child, added, chosen)) return key;
  return std::nullopt;
}

void ConnectedGraphStream::replay(Frame& f, std::uint64_t upto) const {
  for (std::uint64_t s = 1; s < upto; ++s) {
    Graph child = f.g;
    child.add_vertex(s);
    if (auto key = accept(child)) f.seen.insert(std::move(*key));
  }
  f.next_subset = upto;
}

std::optional<Graph> ConnectedGraphStream::next() {
  if (single_pending_) {
    single_pending_ = false;
    ++emitted_;
    return Graph(1);
  }
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const int m = f.g.order();
    if (f.next_subset >= (std::uint64_t{1} << m)) {
      stack_.pop_back();
      continue;
    }
    const std::uint64_t subset = f.next_subset++;
    if (subset == 0) continue;
    Graph child = f.g;
    child.add_vertex(subset);
    auto key = accept(child);
    if (!key) continue;
    if (!f.seen.insert(std::move(*key)).second) continue;
    const int level = m + 1;
    if (level == split_level_) {
      const std::int64_t idx = split_counter_++;
      if (idx % shard_.total != shard_.index) continue;
    }
    if (level == n_) {
      ++emitted_;
      return child;
    }
    stack_.push_back(Frame{std::move(child), 0, {}});
  }
  return std::nullopt;
}

nlohmann::json ConnectedGraphStream::cursor() const {
  nlohmann::json path = nlohmann::json::array();
  for (const Frame& f : stack_) path.push_back(f.next_subset);
  return {
      {"version", kCursorVersion},  {"kind", "connected"},          {"n", n_},
      {"shard", {shard_.index, shard_.total}}, {"path", path},      {"split_counter", split_counter_},
      {"emitted", emitted_},        {"single_pending", single_pending_},
  };
}

std::unique_ptr<ConnectedGraphStream> ConnectedGraphStream::resume(const nlohmann::json& c) {
  check_cursor(c, "connected");
  auto s = std::make_unique<ConnectedGraphStream>(c.at("n").get<int>(), shard_from(c));
  s->stack_.clear();
  s->split_counter_ = c.at("split_counter").get<std::int64_t>();
  s->emitted_ = c.at("emitted").get<std::int64_t>();
  s->single_pending_ = c.at("single_pending").get<bool>();
  const auto& path = c.at("path");
  Graph g(1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto upto = path[i].get<std::uint64_t>();
    if (upto > (std::uint64_t{1} << g.order())) throw CheckpointError("cursor subset out of range");
    Frame f{g, 0, {}};
    s->replay(f, upto);
    s->stack_.push_back(std::move(f));
    if (i + 1 < path.size()) {
      if (upto == 0) throw CheckpointError("cursor path is inconsistent");
      g.add_vertex(upto - 1);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

using Levels = std::vector<int>;

// Successor of a rooted level sequence; p is the position to advance, or -1
// for the last position with level > 1.
std::optional<Levels> next_rooted_tree(const Levels& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Levels result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Left subtree (re-rooted, levels minus one) and the rest of the tree.
std::pair<Levels, Levels> split_tree(const Levels& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Levels rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Smallest valid (centrally rooted, canonical) free-tree sequence at or after
// `candidate`.
Levels next_tree(Levels candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;
  const int p = static_cast<int>(left.size());
  Levels next = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(next);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) next[next.size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

Levels first_tree_layout(int n) {
  Levels layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  return layout;
}

}  // namespace

Graph FreeTreeStream::from_levels(const std::vector<int>& levels) {
  Graph g(static_cast<int>(levels.size()));
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) g.add_edge(i, stack.back());
    stack.push_back(i);
  }
  return g;
}

FreeTreeStream::FreeTreeStream(int n, Shard shard) : n_(n), shard_(shard) {
  shard_.validate();
  if (n < 1 || n > kMaxTreeOrder) {
    throw EnvelopeError("free-tree generator supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  pending_ = n == 1 ? Levels{0} : first_tree_layout(n);
}

std::optional<Graph> FreeTreeStream::next() {
  while (pending_) {
    std::optional<Graph> out;
    if (n_ == 1) {
      out = Graph(1);
      pending_.reset();
    } else {
      Levels tree = next_tree(*pending_);
      out = from_levels(tree);
      pending_ = next_rooted_tree(tree);
    }
    const std::int64_t idx = index_++;
    if (idx % shard_.total == shard_.index) {
      ++emitted_;
      return out;
    }
  }
  return std::nullopt;
}

nlohmann::json FreeTreeStream::cursor() const {
  return {
      {"version", kCursorVersion},
      {"kind", "trees"},
      {"n", n_},
      {"shard", {shard_.index, shard_.total}},
      {"pending", pending_ ? nlohmann::json(*pending_) : nlohmann::json(nullptr)},
      {"index", index_},
      {"emitted", emitted_},
  };
}

std::unique_ptr<FreeTreeStream> FreeTreeStream::resume(const nlohmann::json& c) {
  check_cursor(c, "trees");
  auto s = std::make_unique<FreeTreeStream>(c.at("n").get<int>(), shard_from(c));
  if (c.at("pending").is_null()) {
    s->pending_.reset();
  } else {
    s->pending_ = c.at("pending").get<Levels>();
    if (static_cast<int>(s->pending_->size()) != s->n_) throw CheckpointError("tree cursor has wrong length");
  }
  s->index_ = c.at("index").get<std::int64_t>();
  s->emitted_ = c.at("emitted").get<std::int64_t>();
  return s;
}

// ---------------------------------------------------------------------------

Graph6Stream::Graph6Stream(const std::string& path, std::int64_t skip_lines)
    : path_(path), file_(std::make_unique<std::ifstream>(path)), in_(file_.get()) {
  if (!*file_) throw Error("cannot open graph6 file '" + path + "'");
  std::string line;
  while (line_ < skip_lines && std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos &&
        line != kGraph6Header) {
      ++emitted_;
    }
  }
}

Graph6Stream::Graph6Stream(std::istream& in) : in_(&in) {}

std::optional<Graph> Graph6Stream::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    try {
      Graph g = from_graph6(line);
      ++emitted_;
      return g;
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_) + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw Graph6Error("line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

nlohmann::json Graph6Stream::cursor() const {
  return {{"version", kCursorVersion}, {"kind", "graph6"}, {"path", path_}, {"line", line_}, {"emitted", emitted_}};
}

std::unique_ptr<Graph6Stream> Graph6Stream::resume(const nlohmann::json& c) {
  check_cursor(c, "graph6");
  const std::string path = c.at("path").get<std::string>();
  if (path.empty()) throw CheckpointError("graph6 cursor has no file path (stdin streams cannot resume)");
  return std::make_unique<Graph6Stream>(path, c.at("line").get<std::int64_t>());
}

// ---------------------------------------------------------------------------

std::unique_ptr<ConnectedGraphStream> connected_graphs(int n, Shard shard) {
  return std::make_unique<ConnectedGraphStream>(n, shard);
}

std::unique_ptr<FreeTreeStream> free_trees(int n, Shard shard) { return std::make_unique<FreeTreeStream>(n, shard); }

std::unique_ptr<Graph6Stream> read_graph6_stream(const std::string& path) {
  return std::make_unique<Graph6Stream>(path);
}

std::unique_ptr<GraphStream> resume_stream(const nlohmann::json& cursor) {
  const std::string kind = cursor.value("kind", std::string());
  if (kind == "connected") return ConnectedGraphStream::resume(cursor);
  if (kind == "trees") return FreeTreeStream::resume(cursor);
  if (kind == "graph6") return Graph6Stream::resume(cursor);
  throw CheckpointError("unknown cursor kind '" + kind + "'");
}

std::vector<Graph> collect(GraphStream& stream) {
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace distk
