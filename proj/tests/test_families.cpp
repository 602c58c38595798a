#include <doctest.h>

#include <cmath>

#include "distk/clique.hpp"
#include "distk/distance.hpp"
#include "distk/families.hpp"
#include "distk/structure.hpp"
#include "oracles.hpp"

using namespace distk;

namespace {

// Leaves are the degree-1 vertices past the skeleton; broom i owns a
// contiguous block in construction order.
std::vector<std::vector<Vertex>> leaf_blocks(const BroomSpec& s) {
  std::vector<std::vector<Vertex>> blocks;
  Vertex next = s.hub_count() + s.brooms() * s.handle_length();
  for (int a : s.leaf_counts) {
    blocks.emplace_back();
    for (int j = 0; j < a; ++j) blocks.back().push_back(next++);
  }
  return blocks;
}

void sweep_specs(int k, int t, int max_leaves, const std::function<void(const BroomSpec&)>& f) {
  std::vector<int> a(t, 1);
  while (true) {
    f(BroomSpec{k, a});
    int i = 0;
    while (i < t && a[i] == max_leaves) a[i++] = 1;
    if (i == t) return;
    ++a[i];
  }
}

// double_broom(k + 1, k) numbers the spine 0..k-2 and the two leaves k-1, k.
std::vector<Vertex> path_relabel(int n) {
  std::vector<Vertex> p(n);
  p[0] = n - 2;
  for (int i = 1; i < n - 1; ++i) p[i] = i - 1;
  p[n - 1] = n - 1;
  return p;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("t-broom examples") {
    const Graph b = t_broom({4, {1, 1, 1}});
    CHECK(b.order() == 7);
    CHECK(oracle::count_at(b, 4) == 3);
    const Graph c = t_broom({5, {2, 2}});
    CHECK(c.order() == 8);
    CHECK(oracle::count_at(c, 5) == 4);
    CHECK(t_broom_distance_count({4, {1, 1, 1}}) == 3);
    CHECK(t_broom_distance_count({5, {3, 3}}) == 9);
    CHECK(t_broom_distance_count({6, {2, 1}}) == 2);
  }

  TEST_CASE("figure-style 5-broom for k = 8") {
    const BroomSpec s{8, {2, 2, 2, 2, 2}};
    const Graph g = t_broom(s);
    CHECK(g.order() == 1 + 5 * 3 + 10);
    CHECK(g.degree(0) == 5);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (const auto& block : leaf_blocks(s))
      for (Vertex leaf : block) CHECK(dm.at(0, leaf) == 4);
    CHECK(g.edge_count() == g.order() - 1);
  }

  TEST_CASE("sweep: counts, cross-broom distances, order formula") {
    for (int k = 3; k <= 9; ++k) {
      for (int t = 2; t <= 4; ++t) {
        sweep_specs(k, t, 3, [&](const BroomSpec& s) {
          const Graph g = t_broom(s);
          const int leaves = std::accumulate(s.leaf_counts.begin(), s.leaf_counts.end(), 0);
          const int expected_order = k % 2 == 0 ? 1 + t * (k - 2) / 2 + leaves : t * (k - 1) / 2 + leaves;
          REQUIRE(g.order() == expected_order);
          CHECK(g.is_connected());
          CHECK(oracle::count_at(g, k) == t_broom_distance_count(s));
          const auto d = oracle::distances(g);
          const auto blocks = leaf_blocks(s);
          for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
              for (Vertex x : blocks[i])
                for (Vertex y : blocks[j]) REQUIRE(d[x][y] == k);
        });
      }
    }
  }

  TEST_CASE("balanced leaf counts maximize a fixed total") {
    for (int t = 2; t <= 4; ++t) {
      for (int total = t; total <= 12; ++total) {
        long best = -1;
        long balanced = -1;
        sweep_specs(5, t, total, [&](const BroomSpec& s) {
          if (std::accumulate(s.leaf_counts.begin(), s.leaf_counts.end(), 0) != total) return;
          const long c = t_broom_distance_count(s);
          best = std::max(best, c);
          const auto [lo, hi] = std::minmax_element(s.leaf_counts.begin(), s.leaf_counts.end());
          if (*hi - *lo <= 1) balanced = c;
        });
        CHECK(balanced == best);
      }
    }
  }

  TEST_CASE("BroomSpec validation") {
    CHECK_THROWS_AS(t_broom({2, {1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(t_broom({4, {3}}), InvalidArgument);
    CHECK_THROWS_AS(t_broom({4, {3, 0}}), InvalidArgument);
    CHECK(BroomSpec{4, {3, 2}}.to_string() == "k=4 t=2 leaves=(3,2)");
  }

  TEST_CASE("double broom") {
    CHECK(k_distance_count(double_broom(7, 3), 3) == 6);
    CHECK(double_broom_count(7, 3) == 6);
    CHECK(double_broom_count(11, 3) == 20);
    CHECK(oracle::count_at(double_broom(11, 3), 3) == 20);
    const Graph d105 = double_broom(10, 5);
    CHECK(k_distance_count(d105, 5) == 9);
    const Graph g5 = distance_k_graph(d105, 5);
    CHECK(g5.edge_count() == 9);
    int isolated = 0;
    for (Vertex v = 0; v < 10; ++v) isolated += g5.degree(v) == 0;
    CHECK(isolated == 4);
    for (int k = 3; k <= 9; ++k) {
      CHECK(double_broom_count(k + 1, k) == 1);
      CHECK(double_broom(k + 1, k) == path(k + 1).relabeled(path_relabel(k + 1)));
    }
    CHECK_THROWS_AS(double_broom(3, 3), InvalidArgument);
    CHECK_THROWS_AS(double_broom_count(5, 5), InvalidArgument);
  }

  TEST_CASE("double broom invariants") {
    for (int k = 3; k <= 8; ++k) {
      for (int n = k + 1; n <= k + 9; ++n) {
        const Graph g = double_broom(n, k);
        CHECK(oracle::count_at(g, k) == (n - k + 1) * (n - k + 1) / 4);
        CHECK(popcount(interior_vertices(g, k)) == k - 1);
        if (n >= k + 3) CHECK(clique_number(distance_k_graph(g, k)) == 2);
      }
    }
  }

  TEST_CASE("glued cliques") {
    CHECK(k_distance_count(glued_cliques(7), 2) == 10);
    CHECK(k_distance_count(glued_cliques(5), 2) == 5);
    CHECK(k_distance_count(glued_cliques(9), 2) == 17);
    for (int n = 5; n <= 13; n += 2) {
      const Graph g2 = distance_k_graph(glued_cliques(n), 2);
      CHECK(is_triangle_free(g2));
      CHECK(g2.edge_count() == (n - 1) * (n - 1) / 4 + 1);
      CHECK(oracle::count_at(glued_cliques(n), 2) == g2.edge_count());
    }
    CHECK_THROWS_AS(glued_cliques(6), InvalidArgument);
    CHECK_THROWS_AS(glued_cliques(3), InvalidArgument);
  }

  TEST_CASE("star, path, cycle") {
    CHECK(k_distance_count(star(5), 2) == 6);
    CHECK(k_distance_count(cycle(7), 3) == 7);
    CHECK(k_distance_count(path(6), 5) == 1);
    CHECK_THROWS_AS(star(1), InvalidArgument);
    CHECK_THROWS_AS(path(1), InvalidArgument);
    CHECK_THROWS_AS(cycle(2), InvalidArgument);
  }

  TEST_CASE("optimal broom width") {
    const BroomWidth w = optimal_broom_width(25, 4);
    CHECK(w.value == doctest::Approx(0.25 + std::sqrt(12.0625)));
    CHECK(w.candidates == std::vector<int>{3, 4});
    const BroomWidth w49 = optimal_broom_width(49, 4);
    CHECK(w49.value == doctest::Approx(0.25 + std::sqrt(24.0625)));
    CHECK(w49.candidates == std::vector<int>{5, 6});
    for (int k = 4; k <= 12; k += 2) {
      const BroomWidth small = optimal_broom_width(k + 2, k);
      CHECK(small.value == doctest::Approx(0.25 + std::sqrt(1.0 / 16 + double(k + 1) / (k - 2))));
      CHECK_FALSE(small.candidates.empty());
      CHECK(small.candidates.front() >= 2);
    }
    CHECK_THROWS_AS(optimal_broom_width(20, 5), InvalidArgument);
    CHECK_THROWS_AS(optimal_broom_width(4, 4), InvalidArgument);
  }

  TEST_CASE("integer width test agrees with floating point away from boundaries") {
    for (int k = 4; k <= 14; k += 2) {
      for (int n = k + 1; n <= 200; ++n) {
        const double x = 0.25 + std::sqrt(1.0 / 16 + double(n - 1) / (k - 2));
        for (int t = 2; t <= 12; ++t) {
          if (std::abs(std::abs(t - x) - 1) < 1e-9) continue;
          CHECK(width_within_one(n, k, t) == (std::abs(t - x) <= 1));
        }
      }
    }
  }

  TEST_CASE("broom specs of a given order") {
    const auto specs = broom_specs_of_order(8, 4);
    for (const auto& s : specs) {
      CHECK(s.order() == 8);
      CHECK(std::is_sorted(s.leaf_counts.rbegin(), s.leaf_counts.rend()));
    }
    const auto best = best_broom(8, 4);
    REQUIRE(best.has_value());
    CHECK(best->leaf_counts == std::vector<int>{3, 2});
    CHECK(t_broom_distance_count(*best) == 6);
    CHECK_FALSE(best_broom(4, 4).has_value());
    // For k = 3 each broom adds one hub, so t brooms leave 12 - t leaves.
    int expected = 0;
    for (int t = 2; t <= 6; ++t)
      sweep_specs(3, t, 12 - t, [&](const BroomSpec& s) {
        if (s.order() == 12 && std::is_sorted(s.leaf_counts.rbegin(), s.leaf_counts.rend())) ++expected;
      });
    CHECK(broom_specs_of_order(12, 3).size() == static_cast<std::size_t>(expected));
  }
}
