#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsrx/graph.hpp"

namespace dsrx {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // (smaller, larger), sorted
  uint64_t covered = 0;                    // union of the endpoints

  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum-cardinality matching.  Graphs carrying a bipartition go through
// the layered augmenting algorithm; everything else through blossom
// contraction.  Both scan vertices in index order, so the matching returned
// for a given labelled graph never varies.
Matching max_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

// Size of a maximum matching found by plain backtracking over the lowest
// uncovered vertex.  Exponential and proud of it: this is the independent
// oracle the clever algorithms are checked against.
int max_matching_size_brute(const Graph& g);

// Number of odd-order components of g - s.
int odd_components(const Graph& g, uint64_t s);

// Largest value of odd_components(g, S) - |S| over all vertex subsets,
// together with the first S attaining it (ordered by size, then value).
// Exhaustive over 2^n subsets, so capped at order 12.
std::pair<int, uint64_t> max_deficiency(const Graph& g);

// Confirms max_matching size = (n - max_deficiency)/2 on one graph.
// Returning false means one of the two sides is buggy.  Order must be
// at most 12 for the exhaustive side.
bool tutte_berge_check(const Graph& g);

// For a graph with a recorded bipartition: a set X of left vertices with
// |N(X)| < |X|, when one exists (i.e. when the matching misses part of the
// left side).  Returned as a vertex mask.
std::optional<uint64_t> hall_violator(const Graph& g);

}  // namespace dsrx
