#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsrx/graph.hpp"

namespace dsrx {

// Knobs shared by the verification suites.  Fields that do not apply to a
// given suite are ignored.  jobs only spreads a scan over threads; it never
// changes the report, which is why it is not echoed into the output.
struct ScanOptions {
  double tol = 1e-10;       // eigensolver acceptance residual
  double margin = 1e-7;     // separation required of strict radius inequalities
  int jobs = 1;             // worker threads for the enumeration scans
  std::string graph6_file;  // scan pool from this file instead of the generator
  bool rededup = false;     // re-deduplicate file input (otherwise trusted isomorph-free)
  std::string csv_path;     // optional per-graph (graph6, radius, verdict) dump
  std::ostream* progress = nullptr;  // periodic scan progress lines go here
};

// One failed check.  graph6 is empty when the failure concerns the scan as
// a whole rather than one graph.  margin is the signed slack of the failed
// comparison: how far short of the requirement the measured value landed.
struct ReportFailure {
  std::string graph6;
  std::string reason;
  double margin = 0.0;
};

// Radius minimizer over the pool of failing graphs.  runner_up is the
// smallest radius among pool members not isomorphic to the reference
// extremal graph; absent when the pool holds nothing else.
struct ReportMinimizer {
  std::string graph6;
  double radius = 0.0;
  std::optional<double> runner_up;
  std::optional<double> gap;  // runner_up - radius
};

struct VerificationReport {
  std::string suite;
  nlohmann::ordered_json parameters;  // echo of the suite's inputs
  long long graphs_scanned = 0;
  // Graphs set aside because they have no k-matching at all: "every
  // k-matching extends" is vacuous there, so they belong to neither the
  // extendable side nor the failing pool.
  long long excluded_no_k_matching = 0;
  std::vector<ReportFailure> failures;
  std::optional<ReportMinimizer> minimizer;
  bool passed = false;  // exactly: failures.empty()

  nlohmann::ordered_json to_json() const;
};

// Scans every connected graph of order 2n and asserts that
// K_{2k} v (K_{2n-2k-1} u K_1) sits in the pool of non-k-extendable graphs,
// minimizes the distance spectral radius there, and that every pool member
// within `margin` of it is isomorphic to it.  Requires k >= 1, n >= k+1.
// The built-in generator covers 2n <= 10; larger orders need graph6_file.
VerificationReport verify_theorem1(int n, int k, const ScanOptions& opts = {});

// Same scan over connected balanced bipartite graphs of order 2n, with
// reference graph K_{n-k,n-1} <> K_{k,1}.  Built-in generation covers
// 2n <= 12.
VerificationReport verify_theorem2(int n, int k, const ScanOptions& opts = {});

// Same scan over connected graphs of order n for k-factor-criticality,
// with reference graph K_k v (K_{n-k-1} u K_1).  Requires n == k (mod 2)
// and n >= k+2.
VerificationReport verify_theorem3(int n, int k, const ScanOptions& opts = {});

// Property suite for radius monotonicity under edge addition: each trial
// draws a random connected non-complete graph of order 3..max_order and a
// uniform random non-edge, then requires the radius to drop by more than
// 1e-8 when the edge is added.  Identical (trials, max_order, seed) give a
// byte-identical report.
VerificationReport verify_lemma_pf(int trials, int max_order, std::uint64_t seed,
                                   const ScanOptions& opts = {});

// Single instance of the clique-union flattening inequality:
//   r(K_s v (K_{p1} u ... u K_{pm})) >= r(K_s v (K_{q+1-m} u (m-1) K_1))
// with q = sum(p_i) - 1, and equality exactly when the part profile already
// is the flattened one (decided by isomorphism, not by radius equality).
// Requires s >= 1, at least two parts, every part >= 1.
VerificationReport verify_lemma_bh(int s, const std::vector<int>& parts,
                                   const ScanOptions& opts = {});

// Walks the separator sizes s = 2k+1 .. n+k-1 of the order-2n
// configurations K_s v (K_{2n-2s+2k-1} u (s-2k+1) K_1) and checks each has
// strictly larger radius than the s = 2k base case.  Also recomputes the
// base graph's Perron part values (a, b, c), their row equations, the
// lone-vertex formula c = (1 + (2n-2k-2)/(r+2)) b, the linear form
// (4n-3s+2k-3) b - 2c > 0 for n >= k+3, and, at n = k+2, the sign of the
// two-part quotient polynomial at the base radius.
VerificationReport scan_s_range_general(int n, int k, const ScanOptions& opts = {});

// Bipartite counterpart over K_{s,s+k-1} <> K_{n-s,n-s-k+1} for
// s = 1 .. n-k: mirror configurations at s and n-k+1-s must be isomorphic,
// interior sizes must exceed the base radius, the quadratic-form bound
// 4(n-s-k) a1 (s b1 - b2) must be positive for s >= 3, and at n = k+3 the
// four-part quotient polynomial must be negative at the base radius, which
// itself must exceed 3k+7.
VerificationReport scan_s_range_bipartite(int n, int k, const ScanOptions& opts = {});

}  // namespace dsrx
