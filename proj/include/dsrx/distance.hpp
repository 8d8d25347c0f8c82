#pragma once

#include <string>
#include <vector>

#include "dsrx/graph.hpp"

namespace dsrx {

// All-pairs shortest-path lengths of a connected graph.  Hop counts, so
// everything stays integral; symmetry and the zero diagonal come with the
// construction.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major, n*n

  int at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
  long long row_sum(int i) const;  // transmission of vertex i
  long long min_row_sum() const;
  long long max_row_sum() const;
};

// Breadth-first search from every vertex.  A disconnected input raises
// disconnected_error naming one separated pair.
DistanceMatrix distance_matrix(const Graph& g);

// Row-major CSV, one matrix row per line, no header.
std::string to_csv(const DistanceMatrix& d);

}  // namespace dsrx
