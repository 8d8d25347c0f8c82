#include "dsrx/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "dsrx/errors.hpp"

namespace dsrx {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// General maximum matching by augmenting paths with blossom contraction,
// tracked via base/parent label arrays.  Vertices and neighbours are always
// scanned in index order so the matching is a pure function of the labelled
// graph.
struct BlossomSearch {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<bool> used, in_blossom;
  std::vector<int> queue;

  explicit BlossomSearch(const Graph& graph)
      : g(graph),
        n(graph.order()),
        match(n, -1),
        parent(n, -1),
        base(n),
        used(n, false),
        in_blossom(n, false) {}

  int common_base(int a, int b) {
    std::vector<bool> mark(n, false);
    for (;;) {
      a = base[a];
      mark[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = true;
      in_blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  // Grows an alternating tree from root; returns a newly reachable free
  // vertex, or -1 when the tree is exhausted.
  int find_path(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    queue.clear();
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (uint64_t m = g.neighbor_mask(v); m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (base[v] == base[u] || match[v] == u) continue;
        if (u == root || (match[u] != -1 && parent[match[u]] != -1)) {
          // Odd cycle: contract everything down to the common base.
          int cur = common_base(v, u);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, cur, u);
          mark_path(u, cur, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
        } else if (parent[u] == -1) {
          parent[u] = v;
          if (match[u] == -1) return u;
          used[match[u]] = true;
          queue.push_back(match[u]);
        }
      }
    }
    return -1;
  }

  void run() {
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = parent[u];
        int next = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = next;
      }
    }
  }
};

// Bipartite maximum matching: breadth-first layers from the free left
// vertices, then depth-first augmentation along strictly increasing layers.
struct LayeredSearch {
  const Graph& g;
  std::vector<int> left;
  std::vector<int> match;
  std::vector<int> dist;

  explicit LayeredSearch(const Graph& graph)
      : g(graph), match(graph.order(), -1), dist(graph.order(), kInf) {
    left = graph.left_vertices();
  }

  bool bfs() {
    std::vector<int> q;
    for (int u : left) {
      if (match[u] == -1) {
        dist[u] = 0;
        q.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reachable_free_right = false;
    for (size_t head = 0; head < q.size(); ++head) {
      int u = q[head];
      for (uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
        int w = std::countr_zero(m);
        int next = match[w];
        if (next == -1) {
          reachable_free_right = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          q.push_back(next);
        }
      }
    }
    return reachable_free_right;
  }

  bool dfs(int u) {
    for (uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
      int w = std::countr_zero(m);
      int next = match[w];
      if (next == -1 || (dist[next] == dist[u] + 1 && dfs(next))) {
        match[u] = w;
        match[w] = u;
        return true;
      }
    }
    dist[u] = kInf;  // dead end; never revisit in this phase
    return false;
  }

  void run() {
    while (bfs())
      for (int u : left)
        if (match[u] == -1) dfs(u);
  }
};

Matching from_match_array(const std::vector<int>& match) {
  Matching out;
  for (int v = 0; v < static_cast<int>(match.size()); ++v) {
    if (match[v] > v) {
      out.edges.emplace_back(v, match[v]);
      out.covered |= (uint64_t{1} << v) | (uint64_t{1} << match[v]);
    }
  }
  return out;
}

int brute(const Graph& g, uint64_t free) {
  if (!free) return 0;
  int v = std::countr_zero(free);
  uint64_t rest = free & ~(uint64_t{1} << v);
  int best = brute(g, rest);  // leave v uncovered
  for (uint64_t m = g.neighbor_mask(v) & rest; m; m &= m - 1) {
    int u = std::countr_zero(m);
    best = std::max(best, 1 + brute(g, rest & ~(uint64_t{1} << u)));
  }
  return best;
}

}  // namespace

Matching max_matching(const Graph& g) {
  if (g.has_bipartition()) {
    LayeredSearch s(g);
    s.run();
    return from_match_array(s.match);
  }
  BlossomSearch s(g);
  s.run();
  return from_match_array(s.match);
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return 2 * max_matching(g).size() == g.order();
}

int max_matching_size_brute(const Graph& g) { return brute(g, g.vertex_mask()); }

int odd_components(const Graph& g, uint64_t s) {
  int odd = 0;
  for (uint64_t comp : components_within(g, g.vertex_mask() & ~s))
    if (std::popcount(comp) % 2 == 1) ++odd;
  return odd;
}

std::pair<int, uint64_t> max_deficiency(const Graph& g) {
  const int n = g.order();
  if (n > 12)
    throw unsupported_size_error(
        "exhaustive subset scan capped at order 12, graph has " +
        std::to_string(n) + " vertices");
  // Subsets ordered by size then value, so the reported maximizer is the
  // same one every run and every implementation would name.
  std::vector<uint64_t> subsets(uint64_t{1} << n);
  for (uint64_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](uint64_t a, uint64_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  int best = std::numeric_limits<int>::min();
  uint64_t best_s = 0;
  for (uint64_t s : subsets) {
    int value = odd_components(g, s) - std::popcount(s);
    if (value > best) {
      best = value;
      best_s = s;
    }
  }
  return {best, best_s};
}

bool tutte_berge_check(const Graph& g) {
  return 2 * max_matching(g).size() == g.order() - max_deficiency(g).first;
}

std::optional<uint64_t> hall_violator(const Graph& g) {
  if (!g.has_bipartition())
    throw std::invalid_argument("hall_violator requires a recorded bipartition");
  Matching mm = max_matching(g);
  std::vector<int> match(g.order(), -1);
  for (auto [u, v] : mm.edges) {
    match[u] = v;
    match[v] = u;
  }
  uint64_t free_left = g.left_mask() & ~mm.covered;
  if (!free_left) return std::nullopt;
  // Alternating reachability from the free left vertices.  Every reached
  // right vertex is matched (a free one would have ended an augmenting
  // path, impossible against a maximum matching) and pulls its partner in,
  // so the reached left set X ends up with N(X) smaller than X by at least
  // the number of free seeds.
  uint64_t x = free_left;
  uint64_t y = 0;
  std::vector<int> stack;
  for (uint64_t m = free_left; m; m &= m - 1) stack.push_back(std::countr_zero(m));
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (uint64_t m = g.neighbor_mask(u) & ~y; m; m &= m - 1) {
      int w = std::countr_zero(m);
      y |= uint64_t{1} << w;
      int back = match[w];
      if (back != -1 && !(x & (uint64_t{1} << back))) {
        x |= uint64_t{1} << back;
        stack.push_back(back);
      }
    }
  }
  return x;
}

}  // namespace dsrx
