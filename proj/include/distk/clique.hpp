#pragma once

#include "distk/graph.hpp"

namespace distk {

/// Size of a maximum clique: bitset branch and bound, bounded by greedy
/// colouring of the candidate set. An edgeless nonempty graph gives 1.
int clique_number(const Graph& g);

/// True iff the clique number is at most `cap`; stops at the first
/// (cap + 1)-clique. cap = 2 uses the triangle check.
bool clique_number_at_most(const Graph& g, int cap);

bool is_triangle_free(const Graph& g);

}  // namespace distk
