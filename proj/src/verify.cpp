#include "dsrx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "dsrx/canonical.hpp"
#include "dsrx/enumerate.hpp"
#include "dsrx/errors.hpp"
#include "dsrx/extendability.hpp"
#include "dsrx/graph6.hpp"
#include "dsrx/polynomial.hpp"
#include "dsrx/quotient.hpp"
#include "dsrx/spectral.hpp"

namespace dsrx {

namespace {

// Thresholds the proof-internal recomputations are held to.  These are
// acceptance-level constants, deliberately wider than the eigensolver
// residual so a passing run certifies real slack.
constexpr double kPartSpread = 1e-8;  // Perron value spread within a part
constexpr double kRelative = 1e-8;    // relative error of the row identities
constexpr double kDecrease = 1e-8;    // required radius drop per added edge

std::string radius_text(double x) {
  // Shortest round-trip formatting, same as the JSON output.
  return nlohmann::ordered_json(x).dump();
}

// Index-addressed parallel map: results land in slots, so any job count
// yields the same reduction afterwards.
void parallel_for(long long count, int jobs,
                  const std::function<void(long long)>& body) {
  if (jobs < 2 || count < 2) {
    for (long long i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  std::atomic<bool> bail{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (!bail.load(std::memory_order_relaxed)) {
      long long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        bail = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<long long>(jobs, count));
  pool.reserve(spawn);
  for (int w = 0; w < spawn; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct ScanItem {
  Graph g;
  std::string key6;  // write_graph6 of the scanned representative
};

// The scan population: the built-in generator, or a graph6 file.  File
// graphs are filtered to the scan's domain (right order, connected, and
// balanced bipartite when asked); a wrong order is a hard input error.
std::vector<ScanItem> gather(int order, bool bipartite, const ScanOptions& opts) {
  std::vector<ScanItem> items;
  auto take = [&items](const Graph& g) {
    items.push_back({g, write_graph6(g)});
    return true;
  };
  if (opts.graph6_file.empty()) {
    if (bipartite)
      enumerate_connected_balanced_bipartite(order, take);
    else
      enumerate_connected(order, take);
    return items;
  }
  std::vector<Graph> raw = read_graph6_file(opts.graph6_file);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Graph& g = raw[i];
    if (g.order() != order)
      throw std::invalid_argument(
          opts.graph6_file + ": graph " + std::to_string(i + 1) + " has order " +
          std::to_string(g.order()) + ", the scan expects " + std::to_string(order));
    if (!is_connected(g)) continue;
    if (bipartite) {
      std::optional<std::uint64_t> side = two_color(g);
      if (!side || 2 * std::popcount(*side) != order) continue;
      g.set_bipartition(*side);
    }
    if (opts.rededup &&
        !seen.insert(canonical_form(g, std::max(16, order))).second)
      continue;
    take(g);
  }
  return items;
}

// Common body of the three theorem scans: classify every graph, pool the
// failing ones, and insist the reference graph is the pool's unique radius
// minimizer with real separation.
VerificationReport run_extremal_scan(
    std::string suite, int order, const Graph& extremal, bool bipartite,
    const std::function<ExtendabilityVerdict(const Graph&)>& decide,
    nlohmann::ordered_json parameters, const ScanOptions& opts) {
  VerificationReport rep;
  rep.suite = std::move(suite);
  rep.parameters = std::move(parameters);

  std::vector<ScanItem> items = gather(order, bipartite, opts);
  const bool want_csv = !opts.csv_path.empty();

  struct Outcome {
    bool holds = false;
    bool excluded = false;
    bool in_pool = false;
    double radius = 0.0;
  };
  std::vector<Outcome> outcomes(items.size());
  std::atomic<long long> done{0};
  std::mutex progress_mu;
  parallel_for(static_cast<long long>(items.size()), opts.jobs, [&](long long i) {
    Outcome& out = outcomes[i];
    ExtendabilityVerdict v = decide(items[i].g);
    out.holds = v.holds;
    out.excluded = !v.holds && v.no_k_matching;
    out.in_pool = !v.holds && !v.no_k_matching;
    if (out.in_pool || want_csv)
      out.radius = graph_radius(items[i].g, opts.tol).radius;
    long long seen = ++done;
    if (opts.progress &&
        (seen % 500 == 0 || seen == static_cast<long long>(items.size()))) {
      std::lock_guard<std::mutex> lock(progress_mu);
      *opts.progress << rep.suite << ": " << seen << '/' << items.size()
                     << " graphs\n";
    }
  });

  rep.graphs_scanned = static_cast<long long>(items.size());
  for (const Outcome& out : outcomes)
    if (out.excluded) ++rep.excluded_no_k_matching;

  if (want_csv) {
    std::ofstream csv(opts.csv_path);
    if (!csv)
      throw std::runtime_error("cannot open " + opts.csv_path + " for writing");
    for (std::size_t i = 0; i < items.size(); ++i)
      csv << items[i].key6 << ',' << radius_text(outcomes[i].radius) << ','
          << (outcomes[i].holds ? 1 : 0) << '\n';
  }

  const int iso_cap = std::max(16, order);
  const std::string extremal_key = canonical_form(extremal, iso_cap);

  struct PoolRow {
    std::size_t idx;
    double radius;
    std::string key;
  };
  std::vector<PoolRow> pool;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (outcomes[i].in_pool)
      pool.push_back({i, outcomes[i].radius, canonical_form(items[i].g, iso_cap)});

  if (pool.empty()) {
    rep.failures.push_back(
        {"", "no scanned graph fails the property, so there is no pool to minimize over",
         0.0});
    rep.passed = false;
    return rep;
  }

  const PoolRow* best = &pool[0];
  for (const PoolRow& row : pool)
    if (row.radius < best->radius ||
        (row.radius == best->radius && row.key < best->key))
      best = &row;
  const PoolRow* member = nullptr;  // the reference graph's pool entry
  for (const PoolRow& row : pool)
    if (row.key == extremal_key && (!member || row.radius < member->radius))
      member = &row;

  ReportMinimizer mini;
  mini.graph6 = items[best->idx].key6;
  mini.radius = best->radius;
  double runner = std::numeric_limits<double>::infinity();
  for (const PoolRow& row : pool)
    if (row.key != extremal_key) runner = std::min(runner, row.radius);
  if (std::isfinite(runner)) {
    mini.runner_up = runner;
    mini.gap = runner - best->radius;
  }
  rep.minimizer = mini;

  if (!member) {
    rep.failures.push_back(
        {write_graph6(extremal), "the reference graph is missing from the failing pool", 0.0});
  } else {
    if (best->key != extremal_key)
      rep.failures.push_back({items[best->idx].key6,
                              "a different graph minimizes the radius",
                              best->radius - member->radius});
    if (std::isfinite(runner) && !(runner - member->radius > opts.margin))
      rep.failures.push_back({"",
                              "runner-up radius is within the comparison margin",
                              (runner - member->radius) - opts.margin});
  }
  rep.passed = rep.failures.empty();
  return rep;
}

// Uniform draw from [0, bound) off the raw 64-bit stream, by rejection, so
// reports do not depend on any library's distribution internals.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["parameters"] = parameters;
  j["graphs_scanned"] = graphs_scanned;
  j["excluded_no_k_matching"] = excluded_no_k_matching;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const ReportFailure& f : failures) {
    nlohmann::ordered_json row;
    row["graph6"] = f.graph6;
    row["reason"] = f.reason;
    row["margin"] = f.margin;
    fails.push_back(std::move(row));
  }
  j["failures"] = std::move(fails);
  if (minimizer) {
    nlohmann::ordered_json m;
    m["graph6"] = minimizer->graph6;
    m["radius"] = minimizer->radius;
    if (minimizer->runner_up) {
      m["runner_up"] = *minimizer->runner_up;
      m["gap"] = *minimizer->gap;
    } else {
      m["runner_up"] = nullptr;
      m["gap"] = nullptr;
    }
    j["minimizer"] = std::move(m);
  } else {
    j["minimizer"] = nullptr;
  }
  j["passed"] = passed;
  return j;
}

VerificationReport verify_theorem1(int n, int k, const ScanOptions& opts) {
  if (k < 1) throw std::invalid_argument("verify_theorem1: k must be at least 1");
  if (n < k + 1) throw std::invalid_argument("verify_theorem1: need n >= k+1");
  nlohmann::ordered_json params = {
      {"n", n},
      {"k", k},
      {"order", 2 * n},
      {"source", opts.graph6_file.empty() ? "built-in" : opts.graph6_file},
      {"tol", opts.tol},
      {"margin", opts.margin}};
  return run_extremal_scan(
      "theorem1", 2 * n, extremal_general(n, k), false,
      [k](const Graph& g) { return is_k_extendable_direct(g, k); },
      std::move(params), opts);
}

VerificationReport verify_theorem2(int n, int k, const ScanOptions& opts) {
  if (k < 1) throw std::invalid_argument("verify_theorem2: k must be at least 1");
  if (n < k + 1) throw std::invalid_argument("verify_theorem2: need n >= k+1");
  nlohmann::ordered_json params = {
      {"n", n},
      {"k", k},
      {"order", 2 * n},
      {"source", opts.graph6_file.empty() ? "built-in" : opts.graph6_file},
      {"tol", opts.tol},
      {"margin", opts.margin}};
  return run_extremal_scan(
      "theorem2", 2 * n, extremal_bipartite(n, k), true,
      [k](const Graph& g) { return is_k_extendable_direct(g, k); },
      std::move(params), opts);
}

VerificationReport verify_theorem3(int n, int k, const ScanOptions& opts) {
  if (k < 1) throw std::invalid_argument("verify_theorem3: k must be at least 1");
  if (n < k + 2) throw std::invalid_argument("verify_theorem3: need n >= k+2");
  if (n % 2 != k % 2)
    throw std::invalid_argument("verify_theorem3: n and k must have equal parity");
  nlohmann::ordered_json params = {
      {"n", n},
      {"k", k},
      {"order", n},
      {"source", opts.graph6_file.empty() ? "built-in" : opts.graph6_file},
      {"tol", opts.tol},
      {"margin", opts.margin}};
  return run_extremal_scan(
      "theorem3", n, extremal_factor_critical(n, k), false,
      [k](const Graph& g) { return is_k_factor_critical(g, k); },
      std::move(params), opts);
}

VerificationReport verify_lemma_pf(int trials, int max_order, std::uint64_t seed,
                                   const ScanOptions& opts) {
  if (trials < 1)
    throw std::invalid_argument("verify_lemma_pf: trials must be positive");
  if (max_order < 3)
    throw std::invalid_argument(
        "verify_lemma_pf: connected non-complete graphs need at least 3 vertices");
  VerificationReport rep;
  rep.suite = "lemma-pf";
  rep.parameters = {{"trials", trials},
                    {"max_order", max_order},
                    {"seed", seed},
                    {"decrease", kDecrease},
                    {"tol", opts.tol}};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int order = 3 + static_cast<int>(below(rng, std::uint64_t(max_order - 2)));
    Graph g;
    for (;;) {
      g = Graph(order);
      for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u)
          if (below(rng, 2)) g.add_edge(u, v);
      if (is_connected(g) && g.edge_count() < order * (order - 1) / 2) break;
    }
    std::vector<std::pair<int, int>> holes;
    for (int v = 1; v < order; ++v)
      for (int u = 0; u < v; ++u)
        if (!g.has_edge(u, v)) holes.emplace_back(u, v);
    auto [u, v] = holes[below(rng, holes.size())];
    const double before = graph_radius(g, opts.tol).radius;
    const double after = graph_radius(g.with_edge(u, v), opts.tol).radius;
    if (!(before - after > kDecrease))
      rep.failures.push_back({write_graph6(g),
                              "adding " + std::to_string(u) + "-" +
                                  std::to_string(v) +
                                  " did not lower the radius enough",
                              (before - after) - kDecrease});
  }
  rep.graphs_scanned = trials;
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport verify_lemma_bh(int s, const std::vector<int>& parts,
                                   const ScanOptions& opts) {
  if (s < 1) throw std::invalid_argument("verify_lemma_bh: s must be at least 1");
  if (parts.size() < 2)
    throw std::invalid_argument("verify_lemma_bh: need at least two parts");
  int total = 0;
  for (int p : parts) {
    if (p < 1)
      throw std::invalid_argument("verify_lemma_bh: parts must be positive");
    total += p;
  }
  std::vector<int> flat(parts.size(), 1);
  flat[0] = total - static_cast<int>(parts.size()) + 1;

  VerificationReport rep;
  rep.suite = "lemma-bh";
  rep.parameters = {
      {"s", s}, {"parts", parts}, {"tol", opts.tol}, {"margin", opts.margin}};
  Graph lhs = clique_configuration(s, parts);
  Graph rhs = clique_configuration(s, flat);
  rep.graphs_scanned = 2;

  std::vector<int> profile = parts;
  std::sort(profile.begin(), profile.end(), std::greater<int>());
  const bool expect_equal = profile == flat;

  RadiusComparison cmp = compare_radii(lhs, rhs, opts.tol, opts.margin);
  const double diff = cmp.radius_a - cmp.radius_b;
  switch (cmp.relation) {
    case RadiusRelation::larger:
      if (expect_equal)
        rep.failures.push_back({write_graph6(lhs),
                                "profile already flat, yet the radii differ",
                                -diff});
      break;
    case RadiusRelation::equal_isomorphic:
      if (!expect_equal)
        rep.failures.push_back({write_graph6(lhs),
                                "radii coincide although the profile is not flat",
                                diff});
      break;
    case RadiusRelation::smaller:
      rep.failures.push_back(
          {write_graph6(lhs), "the flattened profile has the larger radius", diff});
      break;
    case RadiusRelation::indistinguishable:
      rep.failures.push_back(
          {write_graph6(lhs),
           "radii could not be separated at the refined tolerance", -std::abs(diff)});
      break;
  }
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport scan_s_range_general(int n, int k, const ScanOptions& opts) {
  if (k < 1)
    throw std::invalid_argument("scan_s_range_general: k must be at least 1");
  if (n < k + 1)
    throw std::invalid_argument("scan_s_range_general: need n >= k+1");
  VerificationReport rep;
  rep.suite = "scan-s-general";
  rep.parameters = {{"n", n},
                    {"k", k},
                    {"s_min", 2 * k + 1},
                    {"s_max", n + k - 1},
                    {"tol", opts.tol},
                    {"margin", opts.margin},
                    {"part_spread", kPartSpread},
                    {"relative", kRelative}};

  const Graph base = extremal_general(n, k);
  const std::string base6 = write_graph6(base);
  const SpectralResult eig = graph_radius(base, opts.tol);
  const double dstar = eig.radius;
  rep.graphs_scanned = 1;

  // Perron part values on the hub, the big clique, and the lone vertex.
  const int sizes[3] = {2 * k, 2 * n - 2 * k - 1, 1};
  double value[3];
  {
    int at = 0;
    for (int part = 0; part < 3; ++part) {
      double lo = eig.perron[at], hi = eig.perron[at], sum = 0.0;
      for (int i = 0; i < sizes[part]; ++i, ++at) {
        lo = std::min(lo, eig.perron[at]);
        hi = std::max(hi, eig.perron[at]);
        sum += eig.perron[at];
      }
      value[part] = sum / sizes[part];
      if (hi - lo > kPartSpread)
        rep.failures.push_back({base6,
                                "Perron vector is not constant on part " +
                                    std::to_string(part),
                                kPartSpread - (hi - lo)});
    }
  }
  const double a = value[0], b = value[1], c = value[2];

  // Row identity of the lone vertex, and its closed consequence.
  const double lone_row = 2 * k * a + 2.0 * (2 * n - 2 * k - 1) * b;
  if (!(std::abs(dstar * c - lone_row) <= kRelative * std::abs(dstar * c)))
    rep.failures.push_back({base6, "lone-vertex row equation drifts",
                            kRelative * std::abs(dstar * c) -
                                std::abs(dstar * c - lone_row)});
  const double predicted = (1.0 + (2.0 * n - 2 * k - 2) / (dstar + 2.0)) * b;
  if (!(std::abs(c - predicted) <= kRelative * std::abs(c)))
    rep.failures.push_back({base6, "lone-vertex value drifts from its formula",
                            kRelative * std::abs(c) - std::abs(c - predicted)});

  if (!(dstar > 2.0 * n - 1))
    rep.failures.push_back({base6, "radius does not exceed the smallest row sum",
                            dstar - (2.0 * n - 1)});

  for (int s = 2 * k + 1; s <= n + k - 1; ++s) {
    Graph gs = tutte_obstruction(n, k, s);
    const double rs = graph_radius(gs, opts.tol).radius;
    ++rep.graphs_scanned;
    if (!(rs > dstar + opts.margin))
      rep.failures.push_back({write_graph6(gs),
                              "separator size " + std::to_string(s) +
                                  " does not exceed the base radius",
                              rs - dstar - opts.margin});
    if (n >= k + 3) {
      const double linear = (4.0 * n - 3 * s + 2 * k - 3) * b - 2 * c;
      if (!(linear > 0))
        rep.failures.push_back({write_graph6(gs),
                                "linear form (4n-3s+2k-3)b - 2c is not positive "
                                "at s = " + std::to_string(s),
                                linear});
    }
  }
  if (n == k + 2) {
    const double at_base = eval(reference_charpoly(QuotientFamily::phi_s, k), dstar);
    if (!(at_base < 0))
      rep.failures.push_back(
          {base6, "phi-s is not negative at the base radius", -at_base});
  }
  rep.passed = rep.failures.empty();
  return rep;
}

VerificationReport scan_s_range_bipartite(int n, int k, const ScanOptions& opts) {
  if (k < 1)
    throw std::invalid_argument("scan_s_range_bipartite: k must be at least 1");
  if (n < k + 1)
    throw std::invalid_argument("scan_s_range_bipartite: need n >= k+1");
  VerificationReport rep;
  rep.suite = "scan-s-bipartite";
  rep.parameters = {{"n", n},
                    {"k", k},
                    {"s_min", 1},
                    {"s_max", n - k},
                    {"tol", opts.tol},
                    {"margin", opts.margin},
                    {"part_spread", kPartSpread},
                    {"relative", kRelative}};

  const Graph base = extremal_bipartite(n, k);
  const std::string base6 = write_graph6(base);
  const SpectralResult eig = graph_radius(base, opts.tol);
  const double dstar = eig.radius;
  rep.graphs_scanned = 1;

  // Part values in block order: a1 on the n-k side block, b1 on the n-1
  // block, a2 on the k block, b2 on the lone vertex.
  const int sizes[4] = {n - k, n - 1, k, 1};
  double value[4];
  {
    int at = 0;
    for (int part = 0; part < 4; ++part) {
      double lo = eig.perron[at], hi = eig.perron[at], sum = 0.0;
      for (int i = 0; i < sizes[part]; ++i, ++at) {
        lo = std::min(lo, eig.perron[at]);
        hi = std::max(hi, eig.perron[at]);
        sum += eig.perron[at];
      }
      value[part] = sum / sizes[part];
      if (hi - lo > kPartSpread)
        rep.failures.push_back({base6,
                                "Perron vector is not constant on part " +
                                    std::to_string(part),
                                kPartSpread - (hi - lo)});
    }
  }
  const double a1 = value[0], b1 = value[1], a2 = value[2], b2 = value[3];

  // The two distance rows the argument leans on, recomputed from scratch.
  const double row_b1 = (n - k) * a1 + k * a2 + 2.0 * (n - 2) * b1 + 2 * b2;
  if (!(std::abs(dstar * b1 - row_b1) <= kRelative * std::abs(dstar * b1)))
    rep.failures.push_back({base6, "row equation for b1 drifts",
                            kRelative * std::abs(dstar * b1) -
                                std::abs(dstar * b1 - row_b1)});
  const double row_b2 = 3.0 * (n - k) * a1 + k * a2 + 2.0 * (n - 1) * b1;
  if (!(std::abs(dstar * b2 - row_b2) <= kRelative * std::abs(dstar * b2)))
    rep.failures.push_back({base6, "row equation for b2 drifts",
                            kRelative * std::abs(dstar * b2) -
                                std::abs(dstar * b2 - row_b2)});

  if (!(dstar > 3.0 * n - 2))
    rep.failures.push_back({base6, "radius does not exceed the smallest row sum",
                            dstar - (3.0 * n - 2)});

  const int smax = n - k;
  const int iso_cap = std::max(16, 2 * n);
  for (int s = 1; s <= smax; ++s) {
    Graph bs = hall_obstruction(n, k, s);
    Graph mirror = hall_obstruction(n, k, smax + 1 - s);
    if (!isomorphic(bs, mirror, iso_cap))
      rep.failures.push_back({write_graph6(bs),
                              "mirror configurations at s = " + std::to_string(s) +
                                  " and " + std::to_string(smax + 1 - s) +
                                  " are not isomorphic",
                              0.0});
    if (s >= 2 && s <= smax - 1) {
      const double rs = graph_radius(bs, opts.tol).radius;
      ++rep.graphs_scanned;
      if (!(rs > dstar + opts.margin))
        rep.failures.push_back({write_graph6(bs),
                                "separator size " + std::to_string(s) +
                                    " does not exceed the base radius",
                                rs - dstar - opts.margin});
      if (s >= 3) {
        const double bound = 4.0 * (n - s - k) * a1 * (s * b1 - b2);
        if (!(bound > 0))
          rep.failures.push_back({write_graph6(bs),
                                  "quadratic-form bound is not positive at s = " +
                                      std::to_string(s),
                                  bound});
      }
    }
  }
  if (n == k + 3) {
    if (!(dstar > 3.0 * k + 7))
      rep.failures.push_back(
          {base6, "base radius does not exceed 3k+7", dstar - (3.0 * k + 7)});
    const double at_base = eval(reference_charpoly(QuotientFamily::phi2, k), dstar);
    if (!(at_base < 0))
      rep.failures.push_back(
          {base6, "phi2 is not negative at the base radius", -at_base});
  }
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace dsrx
