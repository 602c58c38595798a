#include "distk/clique.hpp"

#include <array>

namespace distk {

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

  int run() {
    best_ = g_.order() > 0 ? 1 : 0;
    if (best_ < stop_at_) expand(0, g_.vertices());
    return best_;
  }

 private:
  // Greedy sequential colouring of `candidates`; order[i] is coloured
  // colour[i], non-decreasing in i.
  int colour(VertexSet candidates, std::array<Vertex, 64>& order, std::array<int, 64>& colour) const {
    int count = 0;
    int c = 0;
    VertexSet uncoloured = candidates;
    while (uncoloured) {
      ++c;
      VertexSet available = uncoloured;
      while (available) {
        const Vertex v = lowest(available);
        available &= ~bit(v) & ~g_.neighbours(v);
        uncoloured &= ~bit(v);
        order[count] = v;
        colour[count] = c;
        ++count;
      }
    }
    return count;
  }

  void expand(int size, VertexSet candidates) {
    std::array<Vertex, 64> order;
    std::array<int, 64> colours;
    const int count = colour(candidates, order, colours);
    for (int i = count - 1; i >= 0; --i) {
      if (size + colours[i] <= best_) return;
      const Vertex v = order[i];
      const VertexSet next = candidates & g_.neighbours(v);
      if (next == 0) {
        if (size + 1 > best_) best_ = size + 1;
      } else {
        expand(size + 1, next);
      }
      if (best_ >= stop_at_) return;
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  int stop_at_;
  int best_ = 0;
};

}  // namespace

int clique_number(const Graph& g) { return CliqueSearch(g, Graph::kMaxVertices + 1).run(); }

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet later = g.neighbours(u) & ~low_bits(u + 1);
    VertexSet rest = later;
    while (rest) {
      const Vertex v = lowest(rest);
      rest &= rest - 1;
      if (g.neighbours(v) & later) return false;
    }
  }
  return true;
}

bool clique_number_at_most(const Graph& g, int cap) {
  if (cap < 1) return false;
  if (cap == 1) return g.edge_count() == 0;
  if (cap == 2) return is_triangle_free(g);
  return CliqueSearch(g, cap + 1).run() <= cap;
}

}  // namespace distk
