#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dsrx/canonical.hpp"
#include "dsrx/errors.hpp"
#include "dsrx/graph.hpp"
#include "dsrx/graph6.hpp"

using namespace dsrx;

namespace {

// Deterministic random graph: each pair becomes an edge with probability ~1/2.
Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 0);
  g.add_edge(1, 3);
  g.add_edge(3, 0);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(3, 1));
  CHECK(!g.has_edge(1, 0));
  CHECK(g.degree(3) == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);

  // edges() walks the pairs column-major: (smaller, larger), ordered by the
  // larger endpoint first.  Matching enumeration leans on this order.
  Graph p(4);
  p.add_edge(2, 3);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  auto es = p.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0] == std::pair{0, 1});
  CHECK(es[1] == std::pair{1, 2});
  CHECK(es[2] == std::pair{2, 3});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete(1)));
  CHECK(is_connected(path_graph(6)));
  CHECK(!is_connected(disjoint_union(complete(2), complete(3))));
  CHECK(!is_connected(Graph(0)));  // no vertex to connect
  CHECK(!is_connected(edgeless(2)));

  Graph g = disjoint_union(complete(3), disjoint_union(complete(1), path_graph(2)));
  auto comps = components_within(g, g.vertex_mask());
  REQUIRE(comps.size() == 3);
  CHECK(std::popcount(comps[0]) == 3);
  CHECK(std::popcount(comps[1]) == 1);
  CHECK(std::popcount(comps[2]) == 2);
}

TEST_CASE("two colouring") {
  CHECK(two_color(cycle_graph(4)).has_value());
  CHECK(!two_color(cycle_graph(5)).has_value());
  CHECK(!two_color(complete(3)).has_value());
  auto side = two_color(path_graph(4));
  REQUIRE(side.has_value());
  CHECK(std::popcount(*side) == 2);

  // Bipartite with an odd cycle glued on is rejected even when the odd part
  // is far from vertex 0.
  Graph g = disjoint_union(path_graph(3), cycle_graph(5));
  CHECK(!two_color(g).has_value());
}

TEST_CASE("fixed graphs") {
  CHECK(complete(4).edge_count() == 6);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_bipartite(3, 4).edge_count() == 12);
  Graph pet = petersen();
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(is_connected(pet));
  CHECK(!two_color(pet).has_value());
}

TEST_CASE("join and union") {
  Graph j = join(complete(3), edgeless(4));
  CHECK(j.order() == 7);
  CHECK(j.edge_count() == 3 + 12);

  Graph u = disjoint_union(cycle_graph(4), complete(2));
  CHECK(u.order() == 6);
  CHECK(u.edge_count() == 5);
  CHECK(u.has_edge(4, 5));
  CHECK(!u.has_edge(3, 4));
}

TEST_CASE("diamond blocks and bipartition") {
  // Four consecutive blocks a|b|c|d with complete joins a-b, b-c, c-d; the
  // sides of the bipartition are a+c and b+d.
  Graph d = diamond(3, 5, 1, 1);
  CHECK(d.order() == 10);
  CHECK(d.edge_count() == 3 * 5 + 5 * 1 + 1 * 1);
  REQUIRE(d.has_bipartition());
  CHECK(std::popcount(d.left_mask()) == 4);
  CHECK(std::popcount(d.right_mask()) == 6);
  CHECK(two_color(d).has_value());
  // Crossing edges within a declared side are rejected.
  CHECK_THROWS_AS(d.add_edge(0, 1), std::invalid_argument);
}

TEST_CASE("clique configuration") {
  // Hub clique of size s joined to disjoint cliques of the given sizes.
  Graph g = clique_configuration(2, {3, 1});
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 1 + 2 * 4 + 3);
  CHECK(is_connected(g));
}

TEST_CASE("extremal families") {
  Graph a = extremal_general(3, 1);
  CHECK(a.order() == 6);
  CHECK(a.edge_count() == 12);

  Graph b = extremal_bipartite(3, 1);
  CHECK(b.order() == 6);
  CHECK(b.edge_count() == 7);
  REQUIRE(b.has_bipartition());
  CHECK(std::popcount(b.left_mask()) == 3);

  Graph c = extremal_factor_critical(5, 1);
  CHECK(c.order() == 5);
  CHECK(c.edge_count() == 4 + 3);  // hub vertex joined to all, plus a triangle

  // The two parametrised obstruction families always land on 2n vertices.
  for (int n = 3; n <= 6; ++n) {
    for (int s = 2; s <= n; ++s) {
      Graph t = tutte_obstruction(n, 1, s);
      CHECK(t.order() == 2 * n);
      CHECK(is_connected(t));
    }
    for (int s = 1; s <= n - 1; ++s) {
      Graph h = hall_obstruction(n, 1, s);
      CHECK(h.order() == 2 * n);
      REQUIRE(h.has_bipartition());
      CHECK(std::popcount(h.left_mask()) == n);
    }
  }
}

TEST_CASE("induced subgraph") {
  Graph c5 = cycle_graph(5);
  std::vector<int> old_labels;
  Graph sub = c5.induced(0b00111, &old_labels);
  CHECK(sub.order() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK(old_labels == std::vector<int>{0, 1, 2});

  // Bipartitions project onto the kept vertices.
  Graph d = diamond(2, 2, 1, 1);
  Graph ds = d.induced(0b001111);
  REQUIRE(ds.has_bipartition());
  CHECK(std::popcount(ds.left_mask()) == 2);
}

TEST_CASE("family spec round trip") {
  CHECK(family_kind_from_name("union") == FamilySpec::Kind::clique_union);
  CHECK(family_kind_from_name("extremal-general") == FamilySpec::Kind::extremal_general);
  CHECK(!family_kind_from_name("nonsense").has_value());

  FamilySpec spec{FamilySpec::Kind::extremal_general, {3, 1}};
  BuildResult r = build(spec);
  CHECK(r.graph.order() == 6);
  CHECK(r.warnings.empty());

  // Too few parameters is an input error, not a crash.
  CHECK_THROWS_AS(build({FamilySpec::Kind::diamond, {1, 2}}), std::invalid_argument);
}

TEST_CASE("graph6 fixed vectors") {
  // Encodings checked against an independent implementation.
  CHECK(write_graph6(complete(1)) == "@");
  CHECK(write_graph6(complete(2)) == "A_");
  CHECK(write_graph6(complete(4)) == "C~");
  CHECK(write_graph6(path_graph(4)) == "Ch");

  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(star.has_edge(v, 4));

  // The optional marker some tools prepend is accepted.
  CHECK(parse_graph6(">>graph6<<D?{") == star);
}

TEST_CASE("graph6 errors carry the byte offset") {
  CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("empty"), graph6_error);
  CHECK_THROWS_WITH_AS(parse_graph6("D?"), doctest::Contains("truncated"), graph6_error);
  CHECK_THROWS_WITH_AS(parse_graph6("@@"), doctest::Contains("trailing"), graph6_error);
  CHECK_THROWS_WITH_AS(parse_graph6("A@"), doctest::Contains("padding"), graph6_error);
  CHECK_THROWS_WITH_AS(parse_graph6("A\x05"), doctest::Contains("out of range"),
                       graph6_error);
  // Long-form headers would mean more than 62 vertices.
  CHECK_THROWS_WITH_AS(parse_graph6("~??"), doctest::Contains("not supported"),
                       graph6_error);
}

TEST_CASE("graph6 round trips") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, rng);
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
  }
  // Order zero round-trips too.
  CHECK(parse_graph6(write_graph6(Graph(0))).order() == 0);
}

TEST_CASE("canonical form is relabelling invariant") {
  std::mt19937_64 rng(987);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, rng);
    std::string key = canonical_form(g);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int shuffle = 0; shuffle < 50; ++shuffle) {
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = relabel(g, perm);
      CHECK(canonical_form(h) == key);
      CHECK(isomorphic(g, h));
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK(canonical_form(path_graph(5)) != canonical_form(parse_graph6("D?{")));
  CHECK(!isomorphic(path_graph(5), parse_graph6("D?{")));
  // Same degree sequence, different graphs: two triangles vs a six-cycle.
  Graph tt = disjoint_union(complete(3), complete(3));
  CHECK(!isomorphic(tt, cycle_graph(6)));
  // Regular graphs force actual branching in the search.
  CHECK(canonical_form(cycle_graph(8)) == canonical_form(relabel(cycle_graph(8), {3, 0, 6, 1, 7, 2, 5, 4})));

  // All canonical forms parse back to a graph isomorphic to the input.
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng);
    CHECK(isomorphic(parse_graph6(canonical_form(g)), g));
  }
}

TEST_CASE("canonical cap") {
  Graph big = complete(13);
  CHECK_THROWS_AS(canonical_form(big), unsupported_size_error);
  CHECK(canonical_form(big, 16) == write_graph6(complete(13)));
}

TEST_CASE("coloured canonical form") {
  // Rotating a properly two-coloured cycle swaps which vertices carry which
  // colour but stays colour-isomorphic, so the key is unchanged.
  Graph c4 = cycle_graph(4);
  std::string k1 = canonical_form_colored(c4, {0, 1, 0, 1});
  std::string k2 = canonical_form_colored(c4, {1, 0, 1, 0});
  CHECK(k1 == k2);

  // A path whose endpoints change colour class is a genuinely different
  // coloured graph.
  Graph p3 = path_graph(3);
  CHECK(canonical_form_colored(p3, {0, 1, 0}) != canonical_form_colored(p3, {1, 0, 1}));

  // Colour classes must not be interchangeable even when sizes match: K2
  // coloured 0|1 in either direction is the same coloured graph, but P3's
  // centre colour matters.
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = static_cast<int>(rng() % 2);
    std::string key = canonical_form_colored(g, colors);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    std::vector<int> hcolors(n);
    for (int v = 0; v < n; ++v) hcolors[perm[v]] = colors[v];
    CHECK(canonical_form_colored(h, hcolors) == key);
  }
}
