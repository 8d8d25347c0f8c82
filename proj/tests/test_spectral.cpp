#include <doctest.h>

#include <cmath>
#include <vector>

#include "dsrx/distance.hpp"
#include "dsrx/errors.hpp"
#include "dsrx/graph.hpp"
#include "dsrx/polynomial.hpp"
#include "dsrx/spectral.hpp"

using namespace dsrx;

TEST_CASE("distance matrix basics") {
  DistanceMatrix d = distance_matrix(path_graph(3));
  std::vector<int> expected = {0, 1, 2, 1, 0, 1, 2, 1, 0};
  CHECK(d.entries == expected);
  CHECK(d.row_sum(0) == 3);
  CHECK(d.row_sum(1) == 2);
  CHECK(d.min_row_sum() == 2);
  CHECK(d.max_row_sum() == 3);
  CHECK(to_csv(d) == "0,1,2\n1,0,1\n2,1,0\n");

  DistanceMatrix k5 = distance_matrix(complete(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(k5.at(i, j) == (i == j ? 0 : 1));

  DistanceMatrix p6 = distance_matrix(path_graph(6));
  CHECK(p6.at(0, 5) == 5);
  CHECK(p6.at(5, 0) == 5);
}

TEST_CASE("distance matrix rejects disconnected input") {
  try {
    distance_matrix(disjoint_union(complete(2), complete(2)));
    FAIL("expected disconnected_error");
  } catch (const disconnected_error& e) {
    CHECK(e.u() == 0);
    CHECK(e.v() == 2);
  }
  CHECK_THROWS_AS(distance_matrix(Graph(0)), std::invalid_argument);
}

TEST_CASE("extremal family distances have diameter two") {
  // The hub construction keeps every pair within distance two, and the
  // smallest transmission sits on the hub: 2n-1 at order 2n.
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 2; n <= 7; ++n) {
      DistanceMatrix d = distance_matrix(extremal_general(n, k));
      CHECK(d.n == 2 * n);
      for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
          if (i != j) CHECK((d.at(i, j) == 1 || d.at(i, j) == 2));
      CHECK(d.min_row_sum() == 2 * n - 1);
    }
}

TEST_CASE("spectral radius of complete graphs") {
  // D = J - I has constant row sums, so the all-ones start vector is the
  // exact eigenvector and the radius lands on m-1 immediately.
  for (int m = 2; m <= 12; ++m) {
    SpectralResult r = spectral_radius(distance_matrix(complete(m)));
    CHECK(std::abs(r.radius - (m - 1)) <= 1e-10);
    CHECK(r.residual <= 1e-10);
  }
}

TEST_CASE("spectral radius of small named graphs") {
  CHECK(std::abs(graph_radius(path_graph(3)).radius - (1 + std::sqrt(3.0))) < 1e-9);
  CHECK(std::abs(graph_radius(cycle_graph(6)).radius - 9.0) < 1e-9);
  CHECK(std::abs(graph_radius(petersen()).radius - 15.0) < 1e-9);
  // K2 exercises the shift: unshifted iteration would bounce between the
  // two eigenvectors of [[0,1],[1,0]] forever.
  SpectralResult k2 = graph_radius(complete(2));
  CHECK(std::abs(k2.radius - 1.0) < 1e-10);
}

TEST_CASE("spectral radius of complete bipartite graphs") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      if (a + b < 2) continue;
      double expected = (a + b - 2) + std::sqrt(static_cast<double>(a - b) * (a - b) +
                                                static_cast<double>(a) * b);
      SpectralResult r = graph_radius(complete_bipartite(a, b));
      CHECK(std::abs(r.radius - expected) < 1e-9);
    }
}

TEST_CASE("spectral radius of the constructed families") {
  // Reference values computed with an independent dense eigensolver.
  CHECK(std::abs(graph_radius(extremal_general(3, 1)).radius - 6.142457360426862) < 1e-8);
  CHECK(std::abs(graph_radius(extremal_general(4, 2)).radius - 7.862716664085988) < 1e-8);
  CHECK(std::abs(graph_radius(extremal_bipartite(3, 1)).radius - 8.570406330223827) < 1e-8);
  CHECK(std::abs(graph_radius(extremal_bipartite(4, 2)).radius - 11.172688375489777) < 1e-8);
  CHECK(std::abs(graph_radius(extremal_factor_critical(5, 1)).radius - 5.344101953856736) < 1e-8);
  // K2 join (K2 u K2) comes out at 3 + 2*sqrt(3).
  Graph g = join(complete(2), disjoint_union(complete(2), complete(2)));
  CHECK(std::abs(graph_radius(g).radius - (3 + 2 * std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("spectral result invariants") {
  SpectralResult r = graph_radius(path_graph(4));
  double norm2 = 0;
  for (double v : r.perron) {
    CHECK(v > 0);
    norm2 += v * v;
  }
  CHECK(std::abs(norm2 - 1.0) < 1e-12);
  CHECK(r.residual <= 1e-10);
  CHECK(r.iterations >= 1);

  // Nonconstant row sums pin the radius strictly between the extremes.
  DistanceMatrix d = distance_matrix(path_graph(4));
  CHECK(r.radius > d.min_row_sum());
  CHECK(r.radius < d.max_row_sum());

  CHECK(graph_radius(complete(1)).radius == 0);
  CHECK_THROWS_AS(spectral_radius(distance_matrix(complete(3)), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(distance_matrix(complete(3)), -1e-9),
                  std::invalid_argument);
}

TEST_CASE("adding an edge lowers the radius") {
  // Spot checks here; the randomized sweep lives in the verification suite.
  Graph p4 = path_graph(4);
  double before = graph_radius(p4).radius;
  double after = graph_radius(p4.with_edge(0, 3)).radius;
  CHECK(before - after > 1e-8);

  Graph c6 = cycle_graph(6);
  CHECK(graph_radius(c6).radius - graph_radius(c6.with_edge(0, 3)).radius > 1e-8);
}

TEST_CASE("radius comparison") {
  Graph star = complete_bipartite(1, 3);
  Graph path = path_graph(4);
  CHECK(compare_radii(star, path).relation == RadiusRelation::smaller);
  CHECK(compare_radii(path, star).relation == RadiusRelation::larger);

  Graph relabeled(4);
  relabeled.add_edge(3, 2);
  relabeled.add_edge(2, 0);
  relabeled.add_edge(0, 1);
  RadiusComparison same = compare_radii(path, relabeled);
  CHECK(same.relation == RadiusRelation::equal_isomorphic);
  // Summation order differs under relabelling, so equality is only up to
  // the eigensolver tolerance.
  CHECK(std::abs(same.radius_a - same.radius_b) < 1e-10);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial zero;
  CHECK(zero.degree() == -1);
  CHECK(Polynomial({0, 0}).is_zero());

  Polynomial a({-1, 1});  // x - 1
  Polynomial b({1, 1});   // x + 1
  CHECK(a * b == Polynomial({-1, 0, 1}));
  CHECK(a + b == Polynomial({0, 2}));
  CHECK(b - a == Polynomial({2}));
  CHECK((a - a).is_zero());
  CHECK((a * zero).is_zero());

  Polynomial p({-8, -18, -3, 1});
  CHECK(to_string(p) == "x^3 - 3x^2 - 18x - 8");
  CHECK(to_string(zero) == "0");
  CHECK(to_string(Polynomial({5})) == "5");
  CHECK(to_string(Polynomial({0, -1, 1})) == "x^2 - x");
  CHECK(eval(p, 2.0) == 8 - 12 - 36 - 8);
  CHECK(eval_derivative(p, 2.0) == 12 - 12 - 18);

  CHECK_THROWS_AS(Polynomial({static_cast<long long>(4e18)}) * Polynomial({3}),
                  std::overflow_error);
}

TEST_CASE("largest real root") {
  // x^2 - 2x - 2 and (x+2)(x^2-2x-2) share the dominant root 1 + sqrt(3).
  double target = 1 + std::sqrt(3.0);
  CHECK(std::abs(largest_real_root(Polynomial({-2, -2, 1}), 0, 10) - target) < 1e-12);
  CHECK(std::abs(largest_real_root(Polynomial({-4, -6, 0, 1}), 0, 10) - target) < 1e-12);
  CHECK(std::abs(largest_real_root(Polynomial({-5, 1}), 0, 6) - 5.0) < 1e-12);

  CHECK_THROWS_AS(largest_real_root(Polynomial({7}), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(largest_real_root(Polynomial({-2, -2, 1}), 5, 3),
                  std::invalid_argument);
  // A double root never crosses zero, which the scanner reports rather than
  // silently missing the root.
  CHECK_THROWS_AS(largest_real_root(Polynomial({4, -4, 1}), 0, 10),
                  std::runtime_error);
}
