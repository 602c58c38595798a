#include "distk/search.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "distk/canonical.hpp"
#include "distk/clique.hpp"
#include "distk/distance.hpp"
#include "distk/graph6.hpp"

namespace distk {

std::string to_string(Scope s) { return s == Scope::Connected ? "connected" : "all"; }

Scope scope_from_string(const std::string& s) {
  if (s == "connected") return Scope::Connected;
  if (s == "all") return Scope::All;
  throw InvalidArgument("scope must be 'connected' or 'all', got '" + s + "'");
}

void SearchTask::validate() const {
  if (k < 2) throw InvalidArgument("search needs k >= 2");
  if (clique_cap && *clique_cap < 2) throw InvalidArgument("clique cap must be at least 2");
  if (shards < 1) throw InvalidArgument("shard count must be positive");
  if (threads < 1) throw InvalidArgument("thread count must be positive");
  if (checkpoint_every < 1) throw InvalidArgument("checkpoint cadence must be positive");
  if (external_path.empty()) {
    if (n < 1 || n > kMaxConnectedOrder) {
      throw EnvelopeError("internal search supports 1 <= n <= " + std::to_string(kMaxConnectedOrder) +
                          "; pass an external graph6 stream for larger n");
    }
  }
}

// ---------------------------------------------------------------------------

void WitnessSet::insert(std::string form) {
  if (forms.count(form)) return;
  if (forms.size() >= limit) {
    truncated = true;
    if (limit == 0 || form >= *forms.rbegin()) return;
    forms.insert(std::move(form));
    if (forms.size() > limit) forms.erase(std::prev(forms.end()));
    return;
  }
  forms.insert(std::move(form));
}

void WitnessSet::merge(const WitnessSet& other) {
  truncated = truncated || other.truncated;
  for (const std::string& f : other.forms) insert(f);
}

void PartialScan::merge(const PartialScan& other) {
  scanned += other.scanned;
  passing += other.passing;
  if (other.max_e_gk > max_e_gk) {
    max_e_gk = other.max_e_gk;
    witness_count = other.witness_count;
    const std::size_t limit = witnesses.limit;
    witnesses = other.witnesses;
    witnesses.limit = limit;
  } else if (other.max_e_gk == max_e_gk && max_e_gk >= 0) {
    witness_count += other.witness_count;
    witnesses.merge(other.witnesses);
  }
}

namespace {

// Scans at most `budget` graphs (negative: no limit); true once the stream
// is exhausted.
bool scan_some(GraphStream& stream, int k, std::optional<int> cap, std::int64_t budget, PartialScan& out) {
  for (std::int64_t i = 0; budget < 0 || i < budget; ++i) {
    std::optional<Graph> g = stream.next();
    if (!g) return true;
    ++out.scanned;
    long e;
    if (cap) {
      const Graph gk = distance_k_graph(*g, k);
      if (!clique_number_at_most(gk, *cap)) continue;
      e = gk.edge_count();
    } else {
      e = k_distance_count(*g, k);
    }
    ++out.passing;
    if (e < out.max_e_gk) continue;
    if (e > out.max_e_gk) {
      out.max_e_gk = e;
      out.witness_count = 0;
      out.witnesses.forms.clear();
      out.witnesses.truncated = false;
    }
    ++out.witness_count;
    out.witnesses.insert(canonical_form(*g).bytes);
  }
  return false;
}

nlohmann::json partial_to_json(const PartialScan& p) {
  return {{"scanned", p.scanned},
          {"passing", p.passing},
          {"max_e_gk", p.max_e_gk},
          {"witness_count", p.witness_count},
          {"witnesses", p.witnesses.forms},
          {"witnesses_truncated", p.witnesses.truncated}};
}

PartialScan partial_from_json(const nlohmann::json& j, std::size_t limit) {
  PartialScan p;
  p.scanned = j.at("scanned").get<std::int64_t>();
  p.passing = j.at("passing").get<std::int64_t>();
  p.max_e_gk = j.at("max_e_gk").get<long>();
  p.witness_count = j.at("witness_count").get<std::int64_t>();
  p.witnesses.limit = limit;
  for (const auto& f : j.at("witnesses")) p.witnesses.forms.insert(f.get<std::string>());
  p.witnesses.truncated = j.at("witnesses_truncated").get<bool>();
  return p;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint '" + tmp + "'");
    out << text;
    if (!out) throw CheckpointError("failed writing checkpoint '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json checkpoint_identity(const SearchTask& task, int order, const Shard& shard) {
  return {{"k", task.k},
          {"clique_cap", task.clique_cap ? nlohmann::json(*task.clique_cap) : nlohmann::json(nullptr)},
          {"order", order},
          {"external", task.external_path},
          {"shard", {shard.index, shard.total}},
          {"witness_limit", task.witness_limit}};
}

struct ShardResult {
  PartialScan partial;
  ShardProvenance provenance;
};

// One shard of one order, resuming from and refreshing its checkpoint file.
ShardResult scan_shard(const SearchTask& task, int order, Shard shard) {
  ShardResult res;
  res.provenance = {order, shard.index, shard.total, 0, false};
  res.partial.witnesses.limit = task.witness_limit;
  std::string path;
  if (!task.checkpoint_path.empty()) {
    path = task.checkpoint_path + ".n" + std::to_string(order) + ".s" + std::to_string(shard.index) + "of" +
           std::to_string(shard.total) + ".json";
  }
  const nlohmann::json identity = checkpoint_identity(task, order, shard);
  std::unique_ptr<GraphStream> stream;
  if (!path.empty() && std::filesystem::exists(path)) {
    nlohmann::json saved;
    try {
      std::ifstream in(path);
      saved = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw CheckpointError("corrupt checkpoint '" + path + "': " + e.what());
    }
    if (saved.value("schema", std::string()) != kCheckpointSchema) {
      throw CheckpointError("checkpoint '" + path + "' has an unknown schema/version");
    }
    if (saved.at("identity") != identity) {
      throw CheckpointError("checkpoint '" + path + "' belongs to a different task");
    }
    res.partial = partial_from_json(saved.at("partial"), task.witness_limit);
    res.provenance.resumed = true;
    if (saved.at("done").get<bool>()) {
      res.provenance.scanned = res.partial.scanned;
      return res;
    }
    stream = resume_stream(saved.at("cursor"));
  } else if (!task.external_path.empty()) {
    stream = std::make_unique<Graph6Stream>(task.external_path);
  } else {
    stream = connected_graphs(order, shard);
  }
  const std::int64_t budget = path.empty() ? -1 : task.checkpoint_every;
  for (;;) {
    const bool done = scan_some(*stream, task.k, task.clique_cap, budget, res.partial);
    if (!path.empty()) {
      const nlohmann::json cp{{"schema", kCheckpointSchema},
                              {"tool_version", kToolVersion},
                              {"identity", identity},
                              {"done", done},
                              {"cursor", stream->cursor()},
                              {"partial", partial_to_json(res.partial)}};
      write_atomically(path, cp.dump());
    }
    if (done) break;
  }
  res.provenance.scanned = res.partial.scanned;
  return res;
}

// Runs every shard of one order on `threads` workers and merges in shard order.
std::pair<PartialScan, std::vector<ShardProvenance>> scan_order(const SearchTask& task, int order) {
  const int total = task.external_path.empty() ? task.shards : 1;
  std::vector<ShardResult> results(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < total; i = next++) {
      try {
        results[i] = scan_shard(task, order, Shard{i, total});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int nthreads = std::min(task.threads, total);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  PartialScan merged;
  merged.witnesses.limit = task.witness_limit;
  std::vector<ShardProvenance> prov;
  for (auto& r : results) {
    merged.merge(r.partial);
    prov.push_back(r.provenance);
  }
  return {merged, prov};
}

SearchReport report_from_partial(const SearchTask& task, const PartialScan& p) {
  SearchReport r;
  r.task = task;
  r.graphs_scanned = p.scanned;
  r.graphs_passing = p.passing;
  r.max_e_gk = p.max_e_gk;
  r.witness_count = p.witness_count;
  r.witnesses.assign(p.witnesses.forms.begin(), p.witnesses.forms.end());
  r.witnesses_truncated = p.witnesses.truncated;
  return r;
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > INT64_MAX / b) return INT64_MAX;
  return a * b;
}

// Number of multisets of size r drawn from w items.
std::int64_t multiset_count(std::int64_t w, int r) {
  std::int64_t c = 1;
  for (int i = 1; i <= r; ++i) {
    const std::int64_t num = w + i - 1;
    if (c > INT64_MAX / num) return INT64_MAX;
    c = c * num / i;
  }
  return c;
}

constexpr std::int64_t kCompositionWork = 50'000;

}  // namespace

PartialScan scan_stream(GraphStream& stream, int k, std::optional<int> clique_cap, std::size_t witness_limit) {
  PartialScan p;
  p.witnesses.limit = witness_limit;
  scan_some(stream, k, clique_cap, -1, p);
  return p;
}

long compose_disconnected_max(const std::vector<long>& best_connected, int n) {
  if (n < 1) throw InvalidArgument("order must be positive");
  if (static_cast<int>(best_connected.size()) < n + 1) {
    throw InvalidArgument("connected table has gaps: needs entries for orders 1.." + std::to_string(n));
  }
  std::vector<long> best(n + 1, -1);
  for (int m = 1; m <= n; ++m) {
    best[m] = best_connected[m];
    for (int a = 1; a <= m / 2; ++a) {
      if (best[a] >= 0 && best[m - a] >= 0) best[m] = std::max(best[m], best[a] + best[m - a]);
    }
  }
  return best[n];
}

std::vector<SearchReport> connected_table(const SearchTask& base, int n_max) {
  std::vector<SearchReport> table(n_max + 1);
  for (int m = 1; m <= n_max; ++m) {
    SearchTask t = base;
    t.n = m;
    t.scope = Scope::Connected;
    t.external_path.clear();
    t.validate();
    const auto start = std::chrono::steady_clock::now();
    auto [partial, prov] = scan_order(t, m);
    table[m] = report_from_partial(t, partial);
    table[m].shards = prov;
    table[m].elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return table;
}

SearchReport compose_report(const SearchTask& task, const std::vector<SearchReport>& table) {
  const int n = task.n;
  if (static_cast<int>(table.size()) < n + 1) throw InvalidArgument("connected table has gaps");
  std::vector<long> conn(n + 1, -1);
  SearchReport r;
  r.task = task;
  for (int m = 1; m <= n; ++m) {
    conn[m] = table[m].max_e_gk;
    r.graphs_scanned += table[m].graphs_scanned;
    r.graphs_passing += table[m].graphs_passing;
    r.elapsed_seconds += table[m].elapsed_seconds;
    r.shards.insert(r.shards.end(), table[m].shards.begin(), table[m].shards.end());
  }
  r.max_e_gk = compose_disconnected_max(conn, n);
  r.connected_max = conn[n];
  long split_best = -1;
  for (int a = 1; a <= n / 2; ++a) {
    const long x = compose_disconnected_max(conn, a);
    const long y = compose_disconnected_max(conn, n - a);
    if (x >= 0 && y >= 0) split_best = std::max(split_best, x + y);
  }
  r.disconnected_max = split_best;

  WitnessSet ws;
  ws.limit = task.witness_limit;
  std::int64_t count = 0;
  if (conn[n] == r.max_e_gk) {
    count += table[n].witness_count;
    for (const auto& f : table[n].witnesses) ws.insert(f);
    ws.truncated = ws.truncated || table[n].witnesses_truncated;
  }
  if (split_best == r.max_e_gk && split_best >= 0) {
    // Partitions of n into >= 2 parts (non-increasing) whose connected maxima
    // add up to the optimum; witnesses are multisets of connected witnesses.
    std::vector<int> parts;
    std::int64_t work = 0;
    std::function<void(int, int, long)> partitions = [&](int remaining, int max_part, long value) {
      if (remaining == 0) {
        if (parts.size() < 2 || value != r.max_e_gk) return;
        std::map<int, int> mult;
        for (int p : parts) ++mult[p];
        std::int64_t combos = 1;
        for (auto [size, times] : mult) combos = saturating_mul(combos, multiset_count(table[size].witness_count, times));
        count = combos == INT64_MAX || count > INT64_MAX - combos ? INT64_MAX : count + combos;
        for (auto [size, times] : mult) {
          if (table[size].witnesses_truncated) ws.truncated = true;
        }
        // Enumerate combinations: chosen[i] indexes table[parts[i]].witnesses,
        // non-decreasing within runs of equal part sizes.
        std::vector<std::size_t> chosen(parts.size(), 0);
        std::function<void(std::size_t)> pick = [&](std::size_t i) {
          if (work >= kCompositionWork) {
            ws.truncated = true;
            return;
          }
          if (i == parts.size()) {
            ++work;
            Graph g = from_graph6(table[parts[0]].witnesses[chosen[0]]);
            for (std::size_t j = 1; j < parts.size(); ++j) {
              g = g.disjoint_union(from_graph6(table[parts[j]].witnesses[chosen[j]]));
            }
            ws.insert(canonical_form(g).bytes);
            return;
          }
          const std::size_t start = i > 0 && parts[i] == parts[i - 1] ? chosen[i - 1] : 0;
          for (std::size_t w = start; w < table[parts[i]].witnesses.size(); ++w) {
            chosen[i] = w;
            pick(i + 1);
          }
        };
        pick(0);
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (conn[p] < 0) continue;
        parts.push_back(p);
        partitions(remaining - p, p, value + conn[p]);
        parts.pop_back();
      }
    };
    partitions(n, n - 1, 0);
  }
  r.witness_count = count;
  r.witnesses.assign(ws.forms.begin(), ws.forms.end());
  r.witnesses_truncated = ws.truncated;
  return r;
}

void classify_witnesses(SearchReport& report) {
  report.classification.clear();
  const int n = report.task.n;
  const int k = report.task.k;
  std::optional<CanonicalForm> double_broom_gk;
  if (k >= 3 && n > k) double_broom_gk = canonical_form(distance_k_graph(double_broom(n, k), k));
  struct Candidate {
    BroomSpec spec;
    CanonicalForm gk;
    CanonicalForm graph;
  };
  std::vector<Candidate> brooms;
  for (BroomSpec& s : broom_specs_of_order(n, k)) {
    const Graph b = t_broom(s);
    brooms.push_back({s, canonical_form(distance_k_graph(b, k)), canonical_form(b)});
  }
  const std::size_t limit = std::min(report.witnesses.size(), report.task.classify_limit);
  for (std::size_t i = 0; i < limit; ++i) {
    WitnessClassification c;
    c.form = report.witnesses[i];
    const Graph g = from_graph6(c.form);
    if (g.order() != n) {
      report.classification.push_back(c);
      continue;
    }
    const CanonicalForm gk = canonical_form(distance_k_graph(g, k));
    if (double_broom_gk) c.double_broom_k_isomorphic = gk == *double_broom_gk;
    const CanonicalForm self{c.form};
    for (const Candidate& b : brooms) {
      if (!c.k_isomorphic_broom && b.gk == gk) c.k_isomorphic_broom = b.spec;
      if (!c.isomorphic_broom && b.graph == self) c.isomorphic_broom = b.spec;
    }
    report.classification.push_back(c);
  }
}

SearchReport max_k_distances(const SearchTask& task) {
  task.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchReport r;
  if (!task.external_path.empty()) {
    auto [partial, prov] = scan_order(task, task.n);
    r = report_from_partial(task, partial);
    r.shards = prov;
  } else if (task.scope == Scope::Connected) {
    auto [partial, prov] = scan_order(task, task.n);
    r = report_from_partial(task, partial);
    r.shards = prov;
  } else {
    r = compose_report(task, connected_table(task, task.n));
  }
  classify_witnesses(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ReverifyResult reverify_witnesses(const SearchReport& report) {
  ReverifyResult res;
  for (const std::string& form : report.witnesses) {
    Graph g;
    try {
      g = from_graph6(form);
    } catch (const Error& e) {
      res.ok = false;
      res.problems.push_back(form + ": " + e.what());
      continue;
    }
    if (report.task.external_path.empty() && g.order() != report.task.n) {
      res.problems.push_back(form + ": wrong order");
    }
    if (canonical_form(g).bytes != form) res.problems.push_back(form + ": not in canonical form");
    if (report.task.external_path.empty() && report.task.scope == Scope::Connected && !g.is_connected()) {
      res.problems.push_back(form + ": not connected");
    }
    const Graph gk = distance_k_graph(g, report.task.k);
    if (gk.edge_count() != report.max_e_gk) {
      res.problems.push_back(form + ": e(G_k) = " + std::to_string(gk.edge_count()) + ", report claims " +
                             std::to_string(report.max_e_gk));
    }
    if (report.task.clique_cap && !clique_number_at_most(gk, *report.task.clique_cap)) {
      res.problems.push_back(form + ": violates the clique cap");
    }
  }
  res.ok = res.problems.empty();
  return res;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const SearchTask& t) {
  return {{"n", t.n},
          {"k", t.k},
          {"clique_cap", t.clique_cap ? nlohmann::json(*t.clique_cap) : nlohmann::json(nullptr)},
          {"scope", to_string(t.scope)},
          {"source", t.external_path.empty() ? nlohmann::json("internal") : nlohmann::json(t.external_path)},
          {"shards", t.shards},
          {"threads", t.threads},
          {"checkpoint_path", t.checkpoint_path},
          {"checkpoint_every", t.checkpoint_every},
          {"witness_limit", t.witness_limit},
          {"classify_limit", t.classify_limit}};
}

SearchTask search_task_from_json(const nlohmann::json& j) {
  SearchTask t;
  t.n = j.at("n").get<int>();
  t.k = j.at("k").get<int>();
  if (!j.at("clique_cap").is_null()) t.clique_cap = j.at("clique_cap").get<int>();
  t.scope = scope_from_string(j.at("scope").get<std::string>());
  const std::string src = j.at("source").get<std::string>();
  if (src != "internal") t.external_path = src;
  t.shards = j.at("shards").get<int>();
  t.threads = j.at("threads").get<int>();
  t.checkpoint_path = j.at("checkpoint_path").get<std::string>();
  t.checkpoint_every = j.at("checkpoint_every").get<std::int64_t>();
  t.witness_limit = j.at("witness_limit").get<std::size_t>();
  t.classify_limit = j.at("classify_limit").get<std::size_t>();
  return t;
}

namespace {

nlohmann::json spec_json(const std::optional<BroomSpec>& s) {
  if (!s) return nullptr;
  return {{"k", s->k}, {"t", s->brooms()}, {"leaf_counts", s->leaf_counts}};
}

std::optional<BroomSpec> spec_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return BroomSpec{j.at("k").get<int>(), j.at("leaf_counts").get<std::vector<int>>()};
}

}  // namespace

nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : r.classification) {
    cls.push_back({{"graph", c.form},
                   {"double_broom_k_isomorphic",
                    c.double_broom_k_isomorphic ? nlohmann::json(*c.double_broom_k_isomorphic) : nlohmann::json(nullptr)},
                   {"k_isomorphic_broom", spec_json(c.k_isomorphic_broom)},
                   {"isomorphic_broom", spec_json(c.isomorphic_broom)}});
  }
  nlohmann::json shards = nlohmann::json::array();
  for (const auto& s : r.shards) {
    shards.push_back({{"order", s.order}, {"index", s.index}, {"total", s.total}, {"scanned", s.scanned}, {"resumed", s.resumed}});
  }
  auto opt = [](const std::optional<long>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"schema", kSearchReportSchema},
          {"tool_version", kToolVersion},
          {"task", to_json(r.task)},
          {"graphs_scanned", r.graphs_scanned},
          {"graphs_passing", r.graphs_passing},
          {"max_e_gk", r.max_e_gk},
          {"witness_count", r.witness_count},
          {"witnesses", r.witnesses},
          {"witnesses_truncated", r.witnesses_truncated},
          {"classification", cls},
          {"connected_max", opt(r.connected_max)},
          {"disconnected_max", opt(r.disconnected_max)},
          {"elapsed_seconds", r.elapsed_seconds},
          {"shards", shards}};
}

SearchReport search_report_from_json(const nlohmann::json& j) {
  if (j.value("schema", std::string()) != kSearchReportSchema) {
    throw CheckpointError("not a search report (schema mismatch)");
  }
  SearchReport r;
  r.task = search_task_from_json(j.at("task"));
  r.graphs_scanned = j.at("graphs_scanned").get<std::int64_t>();
  r.graphs_passing = j.at("graphs_passing").get<std::int64_t>();
  r.max_e_gk = j.at("max_e_gk").get<long>();
  r.witness_count = j.at("witness_count").get<std::int64_t>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.witnesses_truncated = j.at("witnesses_truncated").get<bool>();
  for (const auto& c : j.at("classification")) {
    WitnessClassification w;
    w.form = c.at("graph").get<std::string>();
    if (!c.at("double_broom_k_isomorphic").is_null()) w.double_broom_k_isomorphic = c.at("double_broom_k_isomorphic").get<bool>();
    w.k_isomorphic_broom = spec_from(c.at("k_isomorphic_broom"));
    w.isomorphic_broom = spec_from(c.at("isomorphic_broom"));
    r.classification.push_back(w);
  }
  if (!j.at("connected_max").is_null()) r.connected_max = j.at("connected_max").get<long>();
  if (!j.at("disconnected_max").is_null()) r.disconnected_max = j.at("disconnected_max").get<long>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  for (const auto& s : j.at("shards")) {
    r.shards.push_back({s.at("order").get<int>(), s.at("index").get<int>(), s.at("total").get<int>(),
                        s.at("scanned").get<std::int64_t>(), s.at("resumed").get<bool>()});
  }
  return r;
}

std::string csv_header() { return "n,k,cap,scope,graphs_scanned,max_e_gk,witness_count"; }

std::string csv_row(const SearchReport& r) {
  std::ostringstream os;
  os << r.task.n << ',' << r.task.k << ',' << (r.task.clique_cap ? std::to_string(*r.task.clique_cap) : "") << ','
     << to_string(r.task.scope) << ',' << r.graphs_scanned << ',' << r.max_e_gk << ',' << r.witness_count;
  return os.str();
}

}  // namespace distk
