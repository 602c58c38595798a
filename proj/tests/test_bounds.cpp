#include <doctest.h>

#include "distk/bounds.hpp"
#include "distk/clique.hpp"
#include "distk/distance.hpp"
#include "distk/families.hpp"
#include "distk/structure.hpp"
#include "oracles.hpp"

using namespace distk;

TEST_SUITE("bounds") {
  TEST_CASE("closed forms") {
    CHECK(mantel_k_bound(10, 5) == Rational(15));
    CHECK(mantel_k_bound(7, 3) == Rational(35, 4));
    for (int n = 1; n <= 12; ++n) CHECK(mantel_k_bound(n, 1) == Rational(n * n, 4));
    CHECK(Rational(7) <= mantel_k_bound(7, 3));
    CHECK_THROWS_AS(mantel_k_bound(5, 6), InvalidArgument);
    CHECK_THROWS_AS(mantel_k_bound(5, 0), InvalidArgument);

    CHECK(interior_refined_bound(10, 5, 4) == Rational(9));
    CHECK(interior_refined_bound(7, 3, 2) == Rational(25, 4));
    for (int n = 3; n <= 10; ++n)
      for (int k = 1; k <= n; ++k) {
        CHECK(interior_refined_bound(n, k, 0) == mantel_k_bound(n, k));
        for (int r = 0; r <= n; ++r) CHECK(interior_refined_bound(n, k, r) <= mantel_k_bound(n, k));
      }

    CHECK(unaffiliated_bound(10, 4, 6).value == Rational(6));
    CHECK(unaffiliated_bound(9, 0, 0).value == Rational(81, 4));
    CHECK(unaffiliated_bound(7, 2, 2).value == Rational(25, 4));
    CHECK(unaffiliated_bound(7, 2, 2).value == interior_refined_bound(7, 3, 2));
    for (int n = 1; n <= 10; ++n)
      for (int r = 0; r <= n; ++r)
        for (int p = 0; p <= n; ++p) {
          const UnaffiliatedBound b = unaffiliated_bound(n, r, p);
          CHECK(b.value <= b.midpoint);
          CHECK(b.midpoint == Rational((2 * n - r - p) * (2 * n - r - p), 16));
        }
    CHECK_THROWS_AS(unaffiliated_bound(5, 6, 0), InvalidArgument);

    CHECK(star_bound(5) == 6);
    CHECK(star_bound(3) == 1);
    CHECK(star_bound(8) == 21);
    CHECK_THROWS_AS(star_bound(2), InvalidArgument);
    CHECK(to_string(Rational(35, 4)) == "35/4");
    CHECK(to_string(Rational(6)) == "6");
  }

  TEST_CASE("distance decomposition") {
    CHECK(edge_decomposition_check(path(4)));
    CHECK(edge_decomposition_check(cycle(7)));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial)
      CHECK(edge_decomposition_check(oracle::random_connected_graph(2 + trial % 8, 0.2, rng)));
    CHECK_THROWS_AS(edge_decomposition_check(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
  }

  TEST_CASE("reports") {
    const BoundReport db = evaluate_bounds(double_broom(7, 3), 3);
    CHECK(db.e_gk == 6);
    CHECK(db.r == 2);
    CHECK(db.p == 2);
    CHECK(db.gk_triangle_free);
    CHECK(db.all_satisfied());
    CHECK(db.mantel->satisfied == true);
    CHECK(db.interior->value == Rational(25, 4));
    CHECK(db.unaffiliated->value == Rational(25, 4));
    CHECK_FALSE(db.star.has_value());

    const BoundReport c7 = evaluate_bounds(cycle(7), 3);
    CHECK(c7.e_gk == 7);
    CHECK(c7.r == 0);
    CHECK(c7.mantel->value == Rational(35, 4));
    CHECK(c7.mantel->satisfied == true);

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const BoundReport kr = evaluate_bounds(k4, 1);
    CHECK_FALSE(kr.gk_triangle_free);
    CHECK_FALSE(kr.mantel->satisfied.has_value());
    CHECK_FALSE(kr.interior->satisfied.has_value());
    CHECK(kr.all_satisfied());
    const auto j = to_json(kr);
    CHECK(j["mantel_k"]["satisfied"] == "not applicable");

    const BoundReport st = evaluate_bounds(star(6), 2);
    REQUIRE(st.star.has_value());
    CHECK(st.star->value == Rational(10));
    CHECK(st.star->satisfied == true);

    // k beyond the order: Mantel-type values are undefined.
    const BoundReport far = evaluate_bounds(path(3), 5);
    CHECK_FALSE(far.mantel.has_value());
    CHECK(far.e_gk == 0);
    CHECK_FALSE(far.p.has_value());
  }

  TEST_CASE("report fields recompute from scratch") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 3 + trial % 8;
      const Graph g = oracle::random_connected_graph(n, 0.15, rng);
      for (int k = 2; k < n; ++k) {
        const BoundReport b = evaluate_bounds(g, k);
        const auto d = oracle::distances(g);
        int r = 0;
        for (int v = 0; v < n; ++v) {
          bool has = false;
          for (int w = 0; w < n; ++w) has |= d[v][w] == k;
          r += !has;
        }
        CHECK(b.r == r);
        CHECK(b.e_gk == oracle::count_at(g, k));
        if (b.gk_triangle_free) CHECK(b.all_satisfied());
      }
    }
  }
}
