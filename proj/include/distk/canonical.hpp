#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "distk/graph.hpp"

namespace distk {

/// Relabeling-invariant encoding of a graph: the graph6 line of its canonical
/// relabeling. Equal forms iff isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return std::hash<std::string>{}(f.bytes); }
};

struct CanonicalLabeling {
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
  /// The input relabeled by `position`; identical for isomorphic inputs.
  Graph graph;
};

/// Canonical relabeling by equitable refinement plus individualization
/// search, pruned by the automorphisms found along the way. `colours`, when
/// given, is a vertex colouring that isomorphisms must preserve; cells of the
/// initial partition are ordered by colour value.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours = {});

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// True iff G_k and H_k are isomorphic.
bool k_isomorphic(const Graph& g, const Graph& h, int k);

/// True iff some automorphism of g maps u to v.
bool same_orbit(const Graph& g, Vertex u, Vertex v);

}  // namespace distk
