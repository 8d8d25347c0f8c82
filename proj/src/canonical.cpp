#include "dsrx/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "dsrx/errors.hpp"
#include "dsrx/graph6.hpp"

namespace dsrx {

namespace {

using Cells = std::vector<std::vector<int>>;

uint64_t mask_of(const std::vector<int>& cell) {
  uint64_t m = 0;
  for (int v : cell) m |= uint64_t{1} << v;
  return m;
}

// Colour refinement on an ordered partition.  Cells are repeatedly split by
// the number of neighbours a vertex has inside a target cell; subcells are
// ordered by that count, ascending, and take the parent's position.  Every
// decision here depends only on cell positions and neighbour counts, both of
// which are preserved by isomorphism, so corresponding partitions of
// isomorphic graphs refine to corresponding partitions.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t < cells.size() && !changed; ++t) {
      const uint64_t tmask = mask_of(cells[t]);
      for (size_t c = 0; c < cells.size() && !changed; ++c) {
        if (cells[c].size() < 2) continue;
        // Bucket the cell by neighbour count into the target cell.  Vertex
        // order within a bucket follows the parent cell, which keeps cells
        // sorted ascending throughout the search.
        std::vector<std::pair<int, std::vector<int>>> buckets;
        for (int v : cells[c]) {
          int cnt = std::popcount(g.neighbor_mask(v) & tmask);
          auto it = std::find_if(buckets.begin(), buckets.end(),
                                 [&](const auto& b) { return b.first == cnt; });
          if (it == buckets.end())
            buckets.push_back({cnt, {v}});
          else
            it->second.push_back(v);
        }
        if (buckets.size() < 2) continue;
        std::sort(buckets.begin(), buckets.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Cells next;
        next.reserve(cells.size() + buckets.size() - 1);
        for (size_t i = 0; i < cells.size(); ++i) {
          if (i == c)
            for (auto& b : buckets) next.push_back(std::move(b.second));
          else
            next.push_back(std::move(cells[i]));
        }
        cells = std::move(next);
        changed = true;
      }
    }
  }
}

struct Searcher {
  const Graph& g;
  std::string best;            // smallest leaf encoding seen so far
  std::vector<int> best_perm;  // position -> vertex for that encoding
  std::vector<std::vector<int>> autos;  // discovered automorphisms of g

  explicit Searcher(const Graph& graph) : g(graph) {}

  std::string encode(const std::vector<int>& perm) const {
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    Graph relabeled(n);
    for (auto [u, v] : g.edges()) relabeled.add_edge(pos[u], pos[v]);
    return write_graph6(relabeled);
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm;
    perm.reserve(cells.size());
    for (const auto& cell : cells) perm.push_back(cell[0]);
    std::string enc = encode(perm);
    if (best.empty() || enc < best) {
      best = std::move(enc);
      best_perm = std::move(perm);
      return;
    }
    if (enc != best) return;
    // Two labellings with the same encoding expose an automorphism: relabel
    // by the current perm, undo the best one.  These feed the pruning below.
    const int n = g.order();
    std::vector<int> pinv(n);
    for (int i = 0; i < n; ++i) pinv[perm[i]] = i;
    std::vector<int> alpha(n);
    bool identity = true;
    for (int u = 0; u < n; ++u) {
      alpha[u] = best_perm[pinv[u]];
      if (alpha[u] != u) identity = false;
    }
    if (!identity && autos.size() < 64) autos.push_back(std::move(alpha));
  }

  void recurse(Cells cells, std::vector<int> fixed) {
    refine(g, cells);
    size_t split = cells.size();
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        split = c;
        break;
      }
    if (split == cells.size()) {
      leaf(cells);
      return;
    }
    std::set<int> tried;
    for (int v : cells[split]) {
      // If some known automorphism fixes everything individualised so far
      // and carries v onto a candidate already explored, the v-subtree can
      // only repeat encodings we have already seen.
      bool skip = false;
      for (const auto& alpha : autos) {
        bool fixes = true;
        for (int w : fixed)
          if (alpha[w] != w) {
            fixes = false;
            break;
          }
        if (fixes && tried.count(alpha[v])) {
          skip = true;
          break;
        }
      }
      if (!skip) {
        Cells child;
        child.reserve(cells.size() + 1);
        for (size_t c = 0; c < cells.size(); ++c) {
          if (c == split) {
            child.push_back({v});
            std::vector<int> rest;
            for (int w : cells[c])
              if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
          } else {
            child.push_back(cells[c]);
          }
        }
        std::vector<int> child_fixed = fixed;
        child_fixed.push_back(v);
        recurse(std::move(child), std::move(child_fixed));
      }
      tried.insert(v);
    }
  }
};

std::string search(const Graph& g, Cells initial) {
  Searcher s(g);
  s.recurse(std::move(initial), {});
  return s.best;
}

}  // namespace

std::string canonical_form(const Graph& g, int cap) {
  if (g.order() > cap)
    throw unsupported_size_error("canonical form capped at order " +
                                 std::to_string(cap) + ", graph has " +
                                 std::to_string(g.order()) + " vertices");
  if (g.order() == 0) return write_graph6(g);
  Cells cells(1);
  for (int v = 0; v < g.order(); ++v) cells[0].push_back(v);
  return search(g, std::move(cells));
}

std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors,
                                   int cap) {
  if (g.order() > cap)
    throw unsupported_size_error("canonical form capped at order " +
                                 std::to_string(cap) + ", graph has " +
                                 std::to_string(g.order()) + " vertices");
  if (static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("one colour per vertex required");
  // Initial cells are the colour classes, ordered by colour.  Refinement
  // only ever splits cells, so colours stay constant on cells and the leaf
  // labellings all map equal-coloured vertices to the same positions.
  std::vector<int> palette(colors);
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  Cells cells;
  for (int col : palette) {
    std::vector<int> cell;
    for (int v = 0; v < g.order(); ++v)
      if (colors[v] == col) cell.push_back(v);
    cells.push_back(std::move(cell));
  }
  // The colour layout is the same at every leaf, so the key just prefixes
  // the class sizes and colours; two graphs coloured differently can never
  // share a key even if the underlying graphs are isomorphic.
  std::string prefix;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) prefix += ',';
    prefix += std::to_string(palette[i]) + 'x' + std::to_string(cells[i].size());
  }
  prefix += '|';
  if (g.order() == 0) return prefix + write_graph6(g);
  return prefix + search(g, std::move(cells));
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

}  // namespace dsrx
