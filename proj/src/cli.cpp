#include "distk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "distk/bounds.hpp"
#include "distk/clique.hpp"
#include "distk/distance.hpp"
#include "distk/enumeration.hpp"
#include "distk/families.hpp"
#include "distk/graph6.hpp"
#include "distk/search.hpp"
#include "distk/structure.hpp"
#include "distk/verify.hpp"

namespace distk::cli {
namespace {

using json = nlohmann::json;

struct Range {
  int lo = 0;
  int hi = 0;
};

// "7" or "6..9".
Range parse_range(const std::string& text, const char* what) {
  Range r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
    } else {
      r.lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument("trailing");
      const std::string rest = text.substr(dots + 2);
      r.hi = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::logic_error&) {
    throw InvalidArgument(std::string("bad ") + what + " range '" + text + "' (expected N or A..B)");
  }
  if (r.hi < r.lo) throw InvalidArgument(std::string("empty ") + what + " range '" + text + "'");
  return r;
}

Shard parse_shard(const std::string& text) {
  Shard s;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    s.index = std::stoi(text.substr(0, slash));
    s.total = std::stoi(text.substr(slash + 1));
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad shard '" + text + "' (expected INDEX/TOTAL)");
  }
  s.validate();
  return s;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad integer list '" + text + "'");
    }
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("DISTK_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

json set_to_json(VertexSet s) {
  json a = json::array();
  for_each_vertex(s, [&](Vertex v) { a.push_back(v); });
  return a;
}

// Everything the subcommands read, filled in by CLI11.
struct Config {
  std::string n_text;
  std::string k_text;
  int r = 2;
  std::optional<int> cap;
  std::string scope = "connected";
  std::string graph;
  std::string input;
  std::string output;
  std::string format;
  std::string leaves;
  std::string shard_text;
  int shards = 1;
  int threads = 1;
  std::string checkpoint;
  std::int64_t checkpoint_every = 1'000'000;
  std::size_t witness_limit = 10'000;
  std::size_t classify_limit = 1'000;
  std::int64_t exhaustive_cap = 1'000'000;
  int samples = 10'000;
  std::uint64_t seed = 0x5eed;
  bool header = false;
};

json run_config_json(const std::string& command, const Config& c) {
  json j{{"command", command}, {"threads", c.threads}, {"shards", c.shards}};
  if (!c.n_text.empty()) j["n"] = c.n_text;
  if (!c.k_text.empty()) j["k"] = c.k_text;
  if (c.cap) j["clique_cap"] = *c.cap;
  if (!c.input.empty()) j["input"] = c.input;
  if (!c.checkpoint.empty()) j["checkpoint"] = c.checkpoint;
  return j;
}

// Yields graphs from --graph, --input FILE, or stdin (--input -).
std::unique_ptr<GraphStream> open_graphs(const Config& c, std::istringstream& literal) {
  if (!c.graph.empty()) {
    literal.str(c.graph + "\n");
    return std::make_unique<Graph6Stream>(literal);
  }
  if (c.input.empty()) throw InvalidArgument("give a graph with --graph or --input");
  if (c.input == "-") return std::make_unique<Graph6Stream>(std::cin);
  return std::make_unique<Graph6Stream>(c.input);
}

int require_single(const std::string& text, const char* what) {
  const Range r = parse_range(text, what);
  if (r.lo != r.hi) throw InvalidArgument(std::string(what) + " must be a single value here");
  return r.lo;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InvalidArgument("format '" + format + "' is not supported by this command");
}

json analyze(const Graph& g, int k) {
  const Graph gk = distance_k_graph(g, k);
  json degrees = json::array();
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(gk.degree(v));
  json j{{"graph", to_graph6(g)},
         {"n", g.order()},
         {"k", k},
         {"e_gk", gk.edge_count()},
         {"k_degrees", degrees},
         {"clique_number", g.order() == 0 ? 0 : clique_number(gk)},
         {"interior", set_to_json(interior_vertices(g, k))}};
  j["p"] = gk.edge_count() > 0 ? json(min_unaffiliated(g, k)) : json(nullptr);
  j["bounds"] = to_json(evaluate_bounds(g, k));
  return j;
}

std::string conjecture_csv(const ConjectureReport& r) {
  std::ostringstream os;
  os << "claim,parameters,observed,predicted,match,in_scope\n";
  for (const auto& c : r.cells) {
    std::string params;
    for (auto it = c.parameters.begin(); it != c.parameters.end(); ++it) {
      if (!params.empty()) params += ' ';
      params += it.key() + "=" + it.value().dump();
    }
    os << r.claim << ',' << params << ',' << c.observed << ',' << c.predicted << ',' << (c.match ? "true" : "false")
       << ',' << (c.in_scope ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distk: distance-k graphs, extremal families and exhaustive searches", "distk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Config c;
  c.threads = default_threads();

  auto add_output = [&](CLI::App* sub, const std::string& default_format, const std::string& formats) {
    sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
    sub->add_option("--format", c.format, "Output format: " + formats)->default_str(default_format);
  };
  auto add_parallel = [&](CLI::App* sub) {
    sub->add_option("--shards", c.shards, "Number of shards to split each order into")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "Worker threads (default: $DISTK_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--checkpoint", c.checkpoint, "Checkpoint file prefix; existing checkpoints are resumed");
    sub->add_option("--witness-limit", c.witness_limit, "Maximizers kept per report");
  };
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--graph", c.graph, "Graph in graph6");
    sub->add_option("--input", c.input, "graph6 file, one graph per line ('-' for stdin)");
  };

  std::string family;
  std::string verify_claim;
  std::string enumerate_what;
  std::function<int(std::ostream&)> action;
  auto use_format = [&](const char* fallback, std::initializer_list<const char*> allowed) {
    if (c.format.empty()) c.format = fallback;
    check_format(c.format, allowed);
  };

  auto* gk = app.add_subcommand("gk", "Analyze graphs: e(G_k), k-degrees, clique number, interior, bounds");
  gk->add_option("--k", c.k_text, "Distance k")->required();
  add_graph_input(gk);
  gk->callback([&] {
    action = [&](std::ostream& os) {
      use_format("json", {"json", "csv"});
      const int k = require_single(c.k_text, "k");
      std::istringstream literal;
      auto stream = open_graphs(c, literal);
      if (c.format == "csv") os << "graph,n,k,e_gk,clique_number,interior_count,p\n";
      while (auto g = stream->next()) {
        const json j = analyze(*g, k);
        if (c.format == "json") {
          os << j.dump() << '\n';
        } else {
          os << j["graph"].get<std::string>() << ',' << j["n"] << ',' << k << ',' << j["e_gk"] << ','
             << j["clique_number"] << ',' << j["interior"].size() << ',' << (j["p"].is_null() ? "" : j["p"].dump())
             << '\n';
        }
      }
      return kExitOk;
    };
  });
  add_output(gk, "json", "json (one object per line) or csv");

  auto* construct = app.add_subcommand("construct", "Build a member of a graph family");
  construct
      ->add_option("family", family, "double-broom, t-broom, best-broom, glued-cliques, star, path or cycle")
      ->required()
      ->check(CLI::IsMember({"double-broom", "t-broom", "best-broom", "glued-cliques", "star", "path", "cycle"}));
  construct->add_option("--n", c.n_text, "Order");
  construct->add_option("--k", c.k_text, "Distance k");
  construct->add_option("--leaves", c.leaves, "t-broom leaf counts, e.g. 3,2,2");
  construct->callback([&] {
    action = [&](std::ostream& os) {
      use_format("graph6", {"graph6", "dot", "json"});
      auto need = [&](const std::string& text, const char* what) {
        if (text.empty()) throw InvalidArgument(family + " needs --" + what);
        return require_single(text, what);
      };
      Graph g;
      std::optional<BroomSpec> spec;
      if (family == "double-broom") {
        g = double_broom(need(c.n_text, "n"), need(c.k_text, "k"));
      } else if (family == "t-broom") {
        if (c.leaves.empty()) throw InvalidArgument("t-broom needs --leaves");
        spec = BroomSpec{need(c.k_text, "k"), parse_list(c.leaves)};
        g = t_broom(*spec);
      } else if (family == "best-broom") {
        const int n = need(c.n_text, "n");
        const int k = need(c.k_text, "k");
        spec = best_broom(n, k);
        if (!spec) throw InvalidArgument("no broom has " + std::to_string(n) + " vertices for k = " + std::to_string(k));
        g = t_broom(*spec);
      } else if (family == "glued-cliques") {
        g = glued_cliques(need(c.n_text, "n"));
      } else if (family == "star") {
        g = star(need(c.n_text, "n"));
      } else if (family == "path") {
        g = path(need(c.n_text, "n"));
      } else {
        g = cycle(need(c.n_text, "n"));
      }
      if (c.format == "graph6") {
        os << to_graph6(g) << '\n';
      } else if (c.format == "dot") {
        os << to_dot(g, family == "glued-cliques" ? "glued_cliques" : "G");
      } else {
        json j{{"family", family}, {"graph", to_graph6(g)}, {"n", g.order()}};
        if (!c.k_text.empty()) j["e_gk"] = k_distance_count(g, require_single(c.k_text, "k"));
        if (spec) j["broom"] = spec->to_string();
        os << j.dump(2) << '\n';
      }
      return kExitOk;
    };
  });
  add_output(construct, "graph6", "graph6, dot or json");

  auto* bounds = app.add_subcommand("bounds", "Bound reports for a batch of graphs");
  bounds->add_option("--k", c.k_text, "Distance k")->required();
  add_graph_input(bounds);
  bounds->callback([&] {
    action = [&](std::ostream& os) {
      use_format("json", {"json"});
      const int k = require_single(c.k_text, "k");
      std::istringstream literal;
      auto stream = open_graphs(c, literal);
      int exit = kExitOk;
      while (auto g = stream->next()) {
        const BoundReport r = evaluate_bounds(*g, k);
        if (!r.all_satisfied()) exit = kExitMismatch;
        os << to_json(r).dump() << '\n';
      }
      return exit;
    };
  });
  add_output(bounds, "json", "json (one report per line)");

  auto* search = app.add_subcommand("search", "Exhaustive maximum of e(G_k)");
  search->add_option("--n", c.n_text, "Order or range A..B")->required();
  search->add_option("--k", c.k_text, "Distance k")->required();
  search->add_option("--cap", c.cap, "Keep only graphs whose G_k has clique number at most this");
  search->add_option("--scope", c.scope, "connected or all")->check(CLI::IsMember({"connected", "all"}));
  search->add_option("--input", c.input, "Scan this graph6 file instead of generating graphs");
  search->add_option("--checkpoint-every", c.checkpoint_every, "Graphs between checkpoints");
  search->add_option("--classify-limit", c.classify_limit, "Maximizers compared against broom families");
  add_parallel(search);
  search->callback([&] {
    action = [&](std::ostream& os) {
      use_format("json", {"json", "csv"});
      const Range nr = parse_range(c.n_text, "n");
      SearchTask base;
      base.k = require_single(c.k_text, "k");
      base.clique_cap = c.cap;
      base.scope = scope_from_string(c.scope);
      base.external_path = c.input;
      base.shards = c.shards;
      base.threads = c.threads;
      base.checkpoint_path = c.checkpoint;
      base.checkpoint_every = c.checkpoint_every;
      base.witness_limit = c.witness_limit;
      base.classify_limit = c.classify_limit;
      std::vector<SearchReport> reports;
      for (int n = nr.lo; n <= nr.hi; ++n) {
        SearchTask t = base;
        t.n = n;
        reports.push_back(max_k_distances(t));
      }
      if (c.format == "csv") {
        os << csv_header() << '\n';
        for (const auto& r : reports) os << csv_row(r) << '\n';
      } else {
        json arr = json::array();
        for (const auto& r : reports) {
          json j = to_json(r);
          j["run_config"] = run_config_json("search", c);
          arr.push_back(std::move(j));
        }
        os << (reports.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      }
      return kExitOk;
    };
  });
  add_output(search, "json", "json or csv");

  auto* verify = app.add_subcommand("verify", "Check a claim exhaustively over a grid");
  verify
      ->add_option("claim", verify_claim, "k2-bound, triangle-free, tree-theorem, star, lemma8 or bound-suite")
      ->required()
      ->check(CLI::IsMember({"k2-bound", "triangle-free", "tree-theorem", "star", "lemma8", "bound-suite"}));
  verify->add_option("--n", c.n_text, "Order or range A..B");
  verify->add_option("--k", c.k_text, "Distance k or range A..B");
  verify->add_option("--r", c.r, "lemma8 on given graphs: path vertex count r");
  add_graph_input(verify);
  verify->add_option("--exhaustive-cap", c.exhaustive_cap, "lemma8: enumerate spanning trees up to this many");
  verify->add_option("--samples", c.samples, "lemma8: random spanning trees otherwise");
  verify->add_option("--seed", c.seed, "lemma8: sampling seed");
  add_parallel(verify);
  verify->callback([&] {
    action = [&](std::ostream& os) {
      use_format("json", {"json", "csv"});
      SpanningTreeOptions tree_options;
      tree_options.exhaustive_cap = c.exhaustive_cap;
      tree_options.samples = c.samples;
      tree_options.seed = c.seed;
      if (verify_claim == "lemma8" && (!c.graph.empty() || !c.input.empty())) {
        check_format(c.format, {"json"});
        const int k = require_single(c.k_text, "k");
        std::istringstream literal;
        auto stream = open_graphs(c, literal);
        int exit = kExitOk;
        while (auto g = stream->next()) {
          const LemmaVerdict v = spanning_tree_lemma_check(*g, k, c.r, TreeMode::Auto, tree_options);
          if (!v.holds) exit = kExitMismatch;
          os << to_json(v).dump() << '\n';
        }
        return exit;
      }
      if (c.n_text.empty()) throw InvalidArgument("verify needs --n");
      const Range nr = parse_range(c.n_text, "n");
      VerifyOptions opt;
      opt.shards = c.shards;
      opt.threads = c.threads;
      opt.witness_limit = c.witness_limit;
      opt.checkpoint_path = c.checkpoint;
      ConjectureReport rep;
      if (verify_claim == "k2-bound") {
        rep = verify_k2_bound(nr.lo, nr.hi, opt);
      } else if (verify_claim == "triangle-free") {
        if (c.k_text.empty()) throw InvalidArgument("triangle-free needs --k");
        rep = verify_triangle_free_conjecture(require_single(c.k_text, "k"), nr.lo, nr.hi, opt);
      } else if (verify_claim == "tree-theorem") {
        if (c.k_text.empty()) throw InvalidArgument("tree-theorem needs --k");
        const Range kr = parse_range(c.k_text, "k");
        rep = verify_tree_theorem(nr.lo, nr.hi, kr.lo, kr.hi);
      } else if (verify_claim == "star") {
        rep = verify_star_proposition(nr.lo, nr.hi, opt);
      } else if (verify_claim == "lemma8") {
        rep = verify_spanning_tree_lemma(nr.lo, nr.hi, tree_options);
      } else {
        rep = verify_bound_suite(nr.lo, nr.hi);
      }
      if (c.format == "csv") {
        os << conjecture_csv(rep);
      } else {
        json j = to_json(rep);
        j["run_config"] = run_config_json("verify " + verify_claim, c);
        os << j.dump(2) << '\n';
      }
      return rep.consistent() ? kExitOk : kExitMismatch;
    };
  });
  add_output(verify, "json", "json or csv");

  auto* enumerate = app.add_subcommand("enumerate", "Emit graphs up to isomorphism as graph6");
  enumerate->add_option("what", enumerate_what, "connected or trees")
      ->required()
      ->check(CLI::IsMember({"connected", "trees"}));
  enumerate->add_option("--n", c.n_text, "Order")->required();
  enumerate->add_option("--shard", c.shard_text, "Only shard INDEX/TOTAL");
  enumerate->add_flag("--header", c.header, "Start with the >>graph6<< header");
  enumerate->callback([&] {
    action = [&](std::ostream& os) {
      use_format("graph6", {"graph6"});
      const int n = require_single(c.n_text, "n");
      const Shard shard = c.shard_text.empty() ? Shard{} : parse_shard(c.shard_text);
      std::unique_ptr<GraphStream> stream;
      if (enumerate_what == "connected") {
        stream = connected_graphs(n, shard);
      } else {
        stream = free_trees(n, shard);
      }
      if (c.header) os << kGraph6Header;
      while (auto g = stream->next()) os << to_graph6(*g) << '\n';
      return kExitOk;
    };
  });
  add_output(enumerate, "graph6", "graph6");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (!action) throw InvalidArgument("no command given");
    if (c.output.empty()) return action(out);
    std::ofstream file(c.output);
    if (!file) throw Error("cannot open '" + c.output + "' for writing");
    const int code = action(file);
    file.close();
    if (!file) throw Error("failed writing '" + c.output + "'");
    return code;
  } catch (const std::exception& e) {
    err << "distk: error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace distk::cli
