#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "distk/canonical.hpp"
#include "distk/enumeration.hpp"
#include "distk/graph6.hpp"
#include "oracles.hpp"

using namespace distk;
namespace fs = std::filesystem;

namespace {

const std::int64_t kConnected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
const std::int64_t kTrees[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867};

std::vector<std::string> lines_of(GraphStream& s) {
  std::vector<std::string> out;
  while (auto g = s.next()) out.push_back(to_graph6(*g));
  return out;
}

// Connected labeled graphs on n vertices, by the standard recurrence.
long double labeled_connected(int n) {
  std::vector<long double> c(n + 1);
  auto choose = [](int a, int b) {
    long double r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto all = [](int m) { return std::pow(2.0L, m * (m - 1) / 2); };
  for (int m = 1; m <= n; ++m) {
    c[m] = all(m);
    for (int j = 1; j < m; ++j) c[m] -= choose(m - 1, j - 1) * c[j] * all(m - j);
  }
  return c[n];
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("distk_test_" + name); }

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("connected graph counts") {
    for (int n = 1; n <= 8; ++n) {
      auto s = connected_graphs(n);
      std::int64_t count = 0;
      while (auto g = s->next()) {
        REQUIRE(g->order() == n);
        g->validate();
        REQUIRE(g->is_connected());
        ++count;
      }
      CHECK(count == kConnected[n]);
      CHECK(s->emitted() == count);
    }
    CHECK_THROWS_AS(connected_graphs(13), EnvelopeError);
    CHECK_THROWS_AS(connected_graphs(0), EnvelopeError);
  }

  TEST_CASE("labeled dedup oracle for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> want;
      const int pairs = n * (n - 1) / 2;
      for (std::uint32_t m = 0; m < (1U << pairs); ++m) {
        Graph g(n);
        int b = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v, ++b)
            if (m >> b & 1U) g.add_edge(u, v);
        if (oracle::connected(g)) want.insert(oracle::brute_canonical(g));
      }
      std::multiset<std::string> got;
      auto s = connected_graphs(n);
      while (auto g = s->next()) got.insert(oracle::brute_canonical(*g));
      CHECK(std::set<std::string>(got.begin(), got.end()) == want);
      CHECK(got.size() == want.size());
    }
  }

  TEST_CASE("orbit-mass oracle for n = 7") {
    // Distinct classes whose labelings add up to every labeled connected graph.
    std::set<std::string> forms;
    long double mass = 0;
    auto s = connected_graphs(7);
    while (auto g = s->next()) {
      forms.insert(oracle::brute_canonical(*g));
      mass += oracle::factorial(7) / oracle::automorphism_count(*g);
    }
    CHECK(forms.size() == 853);
    CHECK(mass == doctest::Approx(static_cast<double>(labeled_connected(7))));
    CHECK(labeled_connected(7) == doctest::Approx(1866256.0));
  }

  TEST_CASE("free tree counts and oracles") {
    for (int n = 1; n <= 18; ++n) {
      auto s = free_trees(n);
      std::int64_t count = 0;
      std::set<std::string> codes;
      long double mass = 0;
      while (auto t = s->next()) {
        REQUIRE(t->order() == n);
        REQUIRE(t->edge_count() == n - 1);
        REQUIRE(t->is_connected());
        if (n <= 12) {
          const oracle::TreeCode c = oracle::tree_code(*t);
          codes.insert(c.code);
          mass += oracle::factorial(n) / c.aut;
        }
        ++count;
      }
      CHECK(count == kTrees[n]);
      if (n <= 12) {
        CHECK(codes.size() == static_cast<std::size_t>(count));
        if (n >= 2) CHECK(mass == doctest::Approx(static_cast<double>(oracle::ipow(n, n - 2))));
      }
    }
    CHECK_THROWS_AS(free_trees(19), EnvelopeError);
  }

  TEST_CASE("Pruefer dedup oracle for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
      std::set<std::string> want;
      std::vector<int> seq(n - 2, 0);
      while (true) {
        want.insert(oracle::tree_code(oracle::tree_from_pruefer(seq)).code);
        int i = 0;
        while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
        if (i == n - 2) break;
        ++seq[i];
      }
      std::set<std::string> got;
      auto s = free_trees(n);
      while (auto t = s->next()) got.insert(oracle::tree_code(*t).code);
      CHECK(got == want);
    }
  }

  TEST_CASE("shards partition the stream") {
    for (int total : {2, 3, 8}) {
      for (int n : {1, 2, 5, 7}) {
        auto whole = connected_graphs(n);
        std::unordered_set<std::string> all;
        while (auto g = whole->next()) all.insert(canonical_form(*g).bytes);
        std::unordered_set<std::string> joined;
        std::size_t sum = 0;
        for (int i = 0; i < total; ++i) {
          auto s = connected_graphs(n, {i, total});
          while (auto g = s->next()) {
            joined.insert(canonical_form(*g).bytes);
            ++sum;
          }
        }
        CHECK(sum == all.size());
        CHECK(joined == all);
      }
      auto trees = free_trees(11);
      const auto all_trees = lines_of(*trees);
      std::size_t tree_sum = 0;
      for (int i = 0; i < total; ++i) {
        auto s = free_trees(11, {i, total});
        tree_sum += lines_of(*s).size();
      }
      CHECK(tree_sum == all_trees.size());
    }
    CHECK_THROWS_AS(connected_graphs(5, {2, 2}), InvalidArgument);
    CHECK_THROWS_AS(free_trees(5, {0, 0}), InvalidArgument);
  }

  TEST_CASE("resuming from a cursor yields the exact suffix") {
    for (const Shard shard : {Shard{0, 1}, Shard{1, 3}}) {
      auto full = connected_graphs(7, shard);
      const auto expected = lines_of(*full);
      for (std::size_t cut : {std::size_t{0}, std::size_t{1}, expected.size() / 3, expected.size() - 1, expected.size()}) {
        auto s = connected_graphs(7, shard);
        for (std::size_t i = 0; i < cut; ++i) REQUIRE(s->next().has_value());
        const std::string saved = s->cursor().dump();
        auto resumed = resume_stream(nlohmann::json::parse(saved));
        CHECK(resumed->emitted() == static_cast<std::int64_t>(cut));
        const auto rest = lines_of(*resumed);
        CHECK(std::vector<std::string>(expected.begin() + cut, expected.end()) == rest);
      }
    }

    auto trees = free_trees(12);
    const auto all_trees = lines_of(*trees);
    auto partial = free_trees(12);
    for (int i = 0; i < 100; ++i) partial->next();
    auto resumed = resume_stream(partial->cursor());
    CHECK(std::vector<std::string>(all_trees.begin() + 100, all_trees.end()) == lines_of(*resumed));
  }

  TEST_CASE("bad cursors are rejected") {
    auto s = connected_graphs(6);
    nlohmann::json c = s->cursor();
    c["version"] = 99;
    CHECK_THROWS_AS(resume_stream(c), CheckpointError);
    c = s->cursor();
    c["kind"] = "bogus";
    CHECK_THROWS_AS(resume_stream(c), CheckpointError);
    CHECK_THROWS_AS(ConnectedGraphStream::resume(free_trees(5)->cursor()), CheckpointError);
  }

  TEST_CASE("graph6 streams") {
    const fs::path file = temp_file("stream.g6");
    {
      std::ofstream out(file);
      out << ">>graph6<<A_\n\nA?\r\nBw\n";
    }
    Graph6Stream s(file.string());
    auto a = s.next();
    REQUIRE(a);
    CHECK(*a == Graph(2, {{0, 1}}));
    CHECK(*s.next() == Graph(2));
    const nlohmann::json cursor = s.cursor();
    CHECK(s.next()->edge_count() == 3);
    CHECK_FALSE(s.next().has_value());
    auto resumed = resume_stream(cursor);
    CHECK(resumed->next()->edge_count() == 3);
    CHECK_FALSE(resumed->next().has_value());

    {
      std::ofstream out(file);
      out << "A_\nA_\nBw\nA\n";
    }
    auto bad = read_graph6_stream(file.string());
    CHECK(bad->next());
    CHECK(bad->next());  // duplicates are passed through
    CHECK(bad->next());
    try {
      bad->next();
      FAIL("expected a parse error");
    } catch (const Graph6Error& e) {
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    std::istringstream in("~?@?\n");
    Graph6Stream big(in);
    CHECK_THROWS_AS(big.next(), Graph6Error);
    CHECK_THROWS_AS(read_graph6_stream((fs::temp_directory_path() / "distk_missing_file.g6").string()), Error);
    fs::remove(file);
  }

  TEST_CASE("round-trip of every enumerated graph up to 8 vertices") {
    for (int n = 1; n <= 8; ++n) {
      auto s = connected_graphs(n);
      while (auto g = s->next()) REQUIRE(from_graph6(to_graph6(*g)) == *g);
    }
  }
}
