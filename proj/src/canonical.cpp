#include "distk/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "distk/distance.hpp"
#include "distk/graph6.hpp"

namespace distk {

namespace {

// Ordered partition of the vertex set; cells[0..count) are disjoint masks.
struct Partition {
  std::array<VertexSet, Graph::kMaxVertices> cells;
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

using Certificate = std::array<VertexSet, Graph::kMaxVertices>;
using Perm = std::array<Vertex, Graph::kMaxVertices>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(std::span<const int> colours) {
    Partition root;
    if (colours.empty()) {
      root.cells[0] = g_.vertices();
      root.count = 1;
    } else {
      if (static_cast<int>(colours.size()) != n_) throw InvalidArgument("colouring size mismatch");
      std::map<int, VertexSet> by_colour;
      for (Vertex v = 0; v < n_; ++v) by_colour[colours[v]] |= bit(v);
      for (const auto& [c, mask] : by_colour) root.cells[root.count++] = mask;
    }
    std::array<VertexSet, 2 * Graph::kMaxVertices> splitters;
    int nsplit = 0;
    for (int i = 0; i < root.count; ++i) splitters[nsplit++] = root.cells[i];
    refine(root, splitters, nsplit);
    prefix_len_ = 0;
    search(root);

    CanonicalLabeling out;
    out.position.assign(best_pos_.begin(), best_pos_.begin() + n_);
    out.graph = Graph(n_);
    for (Vertex i = 0; i < n_; ++i) out.graph.set_row(i, best_cert_[i]);
    return out;
  }

 private:
  // Splits cells until every cell has a uniform neighbour count into every
  // splitter. Fragments are ordered by that count, so the result depends only
  // on the isomorphism class of (graph, partition).
  void refine(Partition& p, std::array<VertexSet, 2 * Graph::kMaxVertices>& queue, int qlen) const {
    int head = 0;
    // Circular queue; its contents never exceed 2n masks.
    constexpr int cap = 2 * Graph::kMaxVertices;
    int size = qlen;
    while (size > 0) {
      const VertexSet splitter = queue[head];
      head = (head + 1) % cap;
      --size;
      for (int i = 0; i < p.count; ++i) {
        const VertexSet cell = p.cells[i];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<std::pair<int, Vertex>, Graph::kMaxVertices> counts;
        int m = 0;
        bool uniform = true;
        for_each_vertex(cell, [&](Vertex v) {
          counts[m] = {popcount(g_.neighbours(v) & splitter), v};
          if (counts[m].first != counts[0].first) uniform = false;
          ++m;
        });
        if (uniform) continue;
        std::sort(counts.begin(), counts.begin() + m);
        std::array<VertexSet, Graph::kMaxVertices> frags;
        int nf = 0;
        for (int j = 0; j < m; ++j) {
          if (j == 0 || counts[j].first != counts[j - 1].first) frags[nf++] = 0;
          frags[nf - 1] |= bit(counts[j].second);
        }
        // Shift later cells right to make room.
        for (int j = p.count - 1; j > i; --j) p.cells[j + nf - 1] = p.cells[j];
        for (int j = 0; j < nf; ++j) {
          p.cells[i + j] = frags[j];
          if (size < cap) {
            queue[(head + size) % cap] = frags[j];
            ++size;
          }
        }
        p.count += nf - 1;
        i += nf - 1;
      }
    }
  }

  int target_cell(const Partition& p) const {
    int best = -1;
    int best_size = Graph::kMaxVertices + 1;
    for (int i = 0; i < p.count; ++i) {
      const int s = popcount(p.cells[i]);
      if (s > 1 && s < best_size) {
        best = i;
        best_size = s;
      }
    }
    return best;
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // current prefix pointwise; returns the orbit of each explored vertex.
  VertexSet orbit_union(VertexSet explored) const {
    if (explored == 0 || autos_.empty()) return explored;
    std::array<Vertex, Graph::kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& a : autos_) {
      bool fixes = true;
      for (int i = 0; i < prefix_len_ && fixes; ++i) fixes = a[prefix_[i]] == prefix_[i];
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex x = find(v);
        const Vertex y = find(a[v]);
        if (x != y) parent[x] = y;
      }
    }
    VertexSet roots = 0;
    for_each_vertex(explored, [&](Vertex v) { roots |= bit(find(v)); });
    VertexSet out = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (roots & bit(find(v))) out |= bit(v);
    }
    return out;
  }

  void search(const Partition& p) {
    if (p.discrete(n_)) {
      leaf(p);
      return;
    }
    const int t = target_cell(p);
    const VertexSet cell = p.cells[t];
    VertexSet explored = 0;
    for_each_vertex(cell, [&](Vertex w) {
      if (orbit_union(explored) & bit(w)) return;
      Partition child = p;
      for (int j = child.count - 1; j > t; --j) child.cells[j + 1] = child.cells[j];
      child.cells[t] = bit(w);
      child.cells[t + 1] = cell & ~bit(w);
      ++child.count;
      std::array<VertexSet, 2 * Graph::kMaxVertices> queue;
      queue[0] = bit(w);
      refine(child, queue, 1);
      prefix_[prefix_len_++] = w;
      search(child);
      --prefix_len_;
      explored |= bit(w);
    });
  }

  void leaf(const Partition& p) {
    Perm pos;
    Perm lab;
    for (int i = 0; i < n_; ++i) {
      const Vertex v = lowest(p.cells[i]);
      pos[v] = i;
      lab[i] = v;
    }
    Certificate cert{};
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbours(lab[i]), [&](Vertex u) { row |= bit(pos[u]); });
      cert[i] = row;
    }
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = lab;
      best_pos_ = pos;
      return;
    }
    auto same = [&](const Certificate& other) {
      return std::equal(cert.begin(), cert.begin() + n_, other.begin());
    };
    auto record = [&](const Perm& ref_lab) {
      Perm a;
      for (Vertex v = 0; v < n_; ++v) a[v] = ref_lab[pos[v]];
      autos_.push_back(a);
    };
    if (same(first_cert_)) {
      record(first_lab_);
      return;
    }
    const int cmp = std::lexicographical_compare(best_cert_.begin(), best_cert_.begin() + n_,
                                                 cert.begin(), cert.begin() + n_)
                        ? 1
                        : (same(best_cert_) ? 0 : -1);
    if (cmp == 0) {
      record(best_lab_);
    } else if (cmp > 0) {
      best_cert_ = cert;
      best_lab_ = lab;
      best_pos_ = pos;
    }
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Certificate first_cert_{};
  Certificate best_cert_{};
  Perm first_lab_{};
  Perm best_lab_{};
  Perm best_pos_{};
  std::vector<Perm> autos_;
  Perm prefix_{};
  int prefix_len_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours) {
  if (g.order() == 0) return {{}, g};
  return Canonizer(g).run(colours);
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_labeling(g).graph)}; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_labeling(g).graph == canonical_labeling(h).graph;
}

bool k_isomorphic(const Graph& g, const Graph& h, int k) {
  if (g.order() != h.order()) return false;
  return are_isomorphic(distance_k_graph(g, k), distance_k_graph(h, k));
}

bool same_orbit(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  std::vector<int> cu(g.order(), 0);
  std::vector<int> cv(g.order(), 0);
  cu[u] = 1;
  cv[v] = 1;
  return canonical_labeling(g, cu).graph == canonical_labeling(g, cv).graph;
}

}  // namespace distk
