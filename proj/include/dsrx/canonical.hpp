#pragma once

#include <string>
#include <vector>

#include "dsrx/graph.hpp"

namespace dsrx {

// Canonical form: the graph6 string of a canonical relabelling, so two
// graphs are isomorphic exactly when their canonical forms are equal.
// Computed by colour refinement plus backtracking over the remaining cell
// choices, pruned with automorphisms discovered along the way.  The size
// cap guards against the factorial worst case on inputs this project never
// produces; callers working with the larger structured families raise it
// explicitly.
std::string canonical_form(const Graph& g, int cap = 12);

// Same, but under colour-preserving isomorphism.  The returned key starts
// with the colour sequence, so keys of differently-coloured graphs never
// collide.  Used by the bipartite enumerator, where the two sides must not
// be interchangeable mid-growth.
std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors,
                                   int cap = 12);

bool isomorphic(const Graph& a, const Graph& b, int cap = 12);

}  // namespace dsrx
