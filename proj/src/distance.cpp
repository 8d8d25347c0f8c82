#include "dsrx/distance.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dsrx/errors.hpp"

namespace dsrx {

long long DistanceMatrix::row_sum(int i) const {
  long long s = 0;
  for (int j = 0; j < n; ++j) s += at(i, j);
  return s;
}

long long DistanceMatrix::min_row_sum() const {
  long long best = row_sum(0);
  for (int i = 1; i < n; ++i) best = std::min(best, row_sum(i));
  return best;
}

long long DistanceMatrix::max_row_sum() const {
  long long best = row_sum(0);
  for (int i = 1; i < n; ++i) best = std::max(best, row_sum(i));
  return best;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("distance matrix needs at least one vertex");
  DistanceMatrix dm;
  dm.n = n;
  dm.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    uint64_t seen = uint64_t{1} << s;
    uint64_t frontier = seen;
    int dist = 0;
    while (frontier) {
      ++dist;
      uint64_t next = 0;
      for (uint64_t m = frontier; m; m &= m - 1)
        next |= g.neighbor_mask(std::countr_zero(m));
      next &= ~seen;
      for (uint64_t m = next; m; m &= m - 1)
        dm.entries[static_cast<size_t>(s) * n + std::countr_zero(m)] = dist;
      seen |= next;
      frontier = next;
    }
    if (seen != g.vertex_mask())
      throw disconnected_error(s, std::countr_zero(g.vertex_mask() & ~seen));
  }
  return dm;
}

std::string to_csv(const DistanceMatrix& d) {
  std::string out;
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      if (j) out += ',';
      out += std::to_string(d.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace dsrx
