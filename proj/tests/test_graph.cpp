#include <doctest.h>

#include "distk/graph.hpp"
#include "oracles.hpp"

using namespace distk;

TEST_SUITE("graph") {
  TEST_CASE("construction and edges") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(1) == 2);
    g.remove_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.is_connected());
    CHECK(g.component(0) == (bit(0) | bit(1)));
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  }

  TEST_CASE("rejects bad input") {
    CHECK_THROWS_AS(Graph(0), InvalidArgument);
    CHECK_THROWS_AS(Graph(65), InvalidArgument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
    CHECK_THROWS_AS(g.add_vertex(bit(5)), InvalidArgument);
    Graph big(64);
    CHECK_THROWS_AS(big.add_vertex(), InvalidArgument);
    CHECK_THROWS_AS(big.disjoint_union(Graph(1)), InvalidArgument);
    Graph asym(3);
    asym.set_row(0, bit(1));
    CHECK_THROWS_AS(asym.validate(), InvalidArgument);
  }

  TEST_CASE("64-vertex rows use the full word") {
    Graph g(64);
    for (Vertex v = 1; v < 64; ++v) g.add_edge(0, v);
    CHECK(g.degree(0) == 63);
    CHECK(g.neighbours(0) == (~VertexSet{0} & ~bit(0)));
    CHECK(g.is_connected());
    g.validate();
  }

  TEST_CASE("relabel, induce, union") {
    const Graph p(3, {{0, 1}, {1, 2}});
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph q = p.relabeled(perm);
    CHECK(q.has_edge(2, 0));
    CHECK(q.has_edge(0, 1));
    CHECK_FALSE(q.has_edge(2, 1));
    CHECK(q == oracle::permuted(p, perm));

    const Graph sub = p.induced(bit(0) | bit(2));
    CHECK(sub.order() == 2);
    CHECK(sub.edge_count() == 0);

    const Graph u = p.disjoint_union(p);
    CHECK(u.order() == 6);
    CHECK(u.has_edge(3, 4));
    CHECK(u.has_edge(4, 5));
    CHECK_FALSE(u.is_connected());
  }

  TEST_CASE("cut vertices match removal-connectivity oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = oracle::random_connected_graph(7, 0.2, rng);
      for (Vertex v = 0; v < g.order(); ++v) {
        const Graph rest = g.induced(g.vertices() & ~bit(v));
        CHECK(g.is_cut_vertex(v) == !oracle::connected(rest));
      }
    }
  }

  TEST_CASE("add_vertex appends") {
    Graph g(2, {{0, 1}});
    const Vertex v = g.add_vertex(bit(0) | bit(1));
    CHECK(v == 2);
    CHECK(g.edge_count() == 3);
    g.validate();
  }
}
