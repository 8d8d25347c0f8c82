#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsrx {

// Undirected simple graph on at most 62 vertices (the graph6 short-form
// limit, far beyond what the enumeration suites ever touch).  Adjacency is
// one 64-bit mask per vertex, which keeps neighbourhood queries, induced
// subgraphs and component scans cheap at these sizes.
//
// A graph may carry a recorded bipartition, stored as the vertex mask of
// the "left" side.  Family constructors that produce bipartite graphs
// record it; the bipartite matching and extendability routines require it.
// Graphs are plain values: copy freely, all operations on them are pure.
class Graph {
 public:
  static constexpr int max_order = 62;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  std::uint64_t neighbor_mask(int v) const;
  int degree(int v) const;
  std::uint64_t vertex_mask() const;

  // Edges ordered by (larger endpoint, then smaller) -- the column-major
  // order graph6 uses.  This is the canonical enumeration order for
  // matchings, so first-found witnesses are reproducible.
  std::vector<std::pair<int, int>> edges() const;

  bool has_bipartition() const { return left_.has_value(); }
  std::uint64_t left_mask() const;
  std::uint64_t right_mask() const;
  void set_bipartition(std::uint64_t left);
  void clear_bipartition();
  std::vector<int> left_vertices() const;
  std::vector<int> right_vertices() const;

  // Subgraph induced by the vertices in `keep`, renumbered in increasing
  // label order.  A recorded bipartition is projected.  old_labels, if
  // given, receives the original label of each new vertex.
  Graph induced(std::uint64_t keep, std::vector<int>* old_labels = nullptr) const;
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::optional<std::uint64_t> left_;
};

// Connectivity over the whole vertex set; the empty graph counts as
// disconnected.
bool is_connected(const Graph& g);

// Connected components of the subgraph induced by `within`, as vertex
// masks, ordered by smallest contained vertex.
std::vector<std::uint64_t> components_within(const Graph& g, std::uint64_t within);

// Proper 2-colouring if one exists: returns the mask of the side containing
// the lowest-numbered vertex of each component, nullopt on an odd cycle.
std::optional<std::uint64_t> two_color(const Graph& g);

// --- fixed graphs ---------------------------------------------------------

Graph complete(int m);
Graph edgeless(int m);
Graph path_graph(int m);
Graph cycle_graph(int m);
Graph complete_bipartite(int a, int b);  // bipartition recorded
Graph petersen();

// --- operators --------------------------------------------------------------

// Join: g's vertices first, then h's, plus all edges between them.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// K_{a,b} <> K_{c,d}: disjoint union of the two complete bipartite graphs
// plus all edges between the b-part and the c-part.  Blocks are laid out
// contiguously in the order a, b, c, d, so the equitable partitions used by
// the spectral code are contiguous index ranges; the bipartition
// (a+c | b+d) is recorded.
Graph diamond(int a, int b, int c, int d);

// K_s v (K_{p1} u K_{p2} u ... u K_{pm}); join clique first, then the union
// cliques, all blocks contiguous in the order written.
Graph clique_configuration(int s, const std::vector<int>& parts);

// --- extremal families ------------------------------------------------------

// K_{2k} v (K_{2n-2k-1} u K_1), order 2n: the unique minimizer of the
// distance spectral radius among connected non-k-extendable graphs.
Graph extremal_general(int n, int k);

// K_{n-k,n-1} <> K_{k,1}, order 2n: the bipartite counterpart.
Graph extremal_bipartite(int n, int k);

// K_k v (K_{n-k-1} u K_1), order n: minimizer among connected graphs that
// are not k-factor-critical (n == k mod 2).
Graph extremal_factor_critical(int n, int k);

// Largest graph admitting a Tutte-type obstruction with separator size s:
// K_s v (K_{2n-2s+2k-1} u (s-2k+1) K_1), order 2n, defined for
// 2k <= s <= n+k-1.  s = 2k reproduces extremal_general.
Graph tutte_obstruction(int n, int k, int s);

// Largest balanced bipartite graph admitting a Hall-type obstruction of
// size s: K_{s,s+k-1} <> K_{n-s,n-s-k+1}, order 2n, defined for
// 1 <= s <= n-k.  s = n-k reproduces extremal_bipartite, and s and
// n-k+1-s give isomorphic graphs.
Graph hall_obstruction(int n, int k, int s);

// --- family specs (CLI `construct`) ----------------------------------------

struct FamilySpec {
  enum class Kind {
    complete,        // [m]
    empty,           // [m] -> m K_1
    join,            // [s, p1..pm] -> K_s v (K_{p1} u ... u K_{pm})
    clique_union,    // [p1..pm] -> K_{p1} u ... u K_{pm}   (name: "union")
    diamond,         // [a, b, c, d]
    extremal_general,          // [n, k]
    extremal_bipartite,        // [n, k]
    extremal_factor_critical,  // [n, k]
    configuration,   // [s, p1..pm]
  };
  Kind kind;
  std::vector<int> params;
};

struct BuildResult {
  Graph graph;
  // Parameter sets that construct fine but fall outside the theorems'
  // ranges (wrong parity, k = 0, ...) come back with a warning, not an
  // error.
  std::vector<std::string> warnings;
};

BuildResult build(const FamilySpec& spec);
std::optional<FamilySpec::Kind> family_kind_from_name(std::string_view name);
std::string_view family_name(FamilySpec::Kind kind);

}  // namespace dsrx
