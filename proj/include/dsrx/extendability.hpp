#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsrx/graph.hpp"

namespace dsrx {

// What a failed decider hands back:
//   tutte-set    — S whose removal leaves more than |S|-2k odd components
//                  (|S|-k for factor-criticality)
//   hall-set     — X on the left side with |N(X)| < |X| + k
//   bad-matching — a k-matching whose covered vertices cannot be avoided
//                  by any perfect matching
//   parity       — the order/balance makes the property impossible outright
enum class WitnessKind { tutte_set, hall_set, bad_matching, parity };

struct Witness {
  WitnessKind kind = WitnessKind::parity;
  std::vector<int> vertices;                // tutte-set / hall-set
  std::vector<std::pair<int, int>> edges;   // bad-matching
};

struct ExtendabilityVerdict {
  int k = 0;
  bool holds = false;
  // The property is also reported as failing when the graph has no
  // k-matching at all; this marker keeps that case distinguishable, and the
  // theorem scans exclude such graphs from their tallies.
  bool no_k_matching = false;
  std::optional<Witness> witness;
};

std::string witness_json(const Witness& w);
std::string verdict_json(const ExtendabilityVerdict& v);

// Every decider agrees on the preliminary questions, in this order: k = 0
// collapses to perfect-matching existence; impossible parity (odd order, or
// an unbalanced bipartition) fails with a parity witness; a graph without
// any k-matching fails with the marker above.  Only then does the
// decider-specific scan run, so verdicts are comparable across deciders.

// Enumerates the k-matchings in edge order and tries to finish each one off
// to a perfect matching.  Works on any connected graph.
ExtendabilityVerdict is_k_extendable_direct(const Graph& g, int k);

// Scans every S containing a k-matching for o(G-S) <= |S| - 2k.
// Exhaustive over subsets: order capped at 12.
ExtendabilityVerdict is_k_extendable_tutte(const Graph& g, int k);

// Bipartite neighbourhood condition: balanced sides and |N(X)| >= |X| + k
// for every nonempty X on the left with |X| <= |left| - k.  Requires a
// recorded bipartition.
ExtendabilityVerdict is_k_extendable_hall(const Graph& g, int k);

// Deletes every k left + k right vertex choice and asks for a perfect
// matching in the rest.  Requires a recorded bipartition.  A failing
// deletion is converted to a hall-set witness so the reported certificate
// is always one of the schema kinds.
ExtendabilityVerdict is_k_extendable_deletion(const Graph& g, int k);

// Every |S| = k deletion must leave a perfect matching.  Needs n == k
// (mod 2); the Tutte-style variant scans o(G-S) <= |S| - k over all
// |S| >= k (order capped at 12).
ExtendabilityVerdict is_k_factor_critical(const Graph& g, int k);
ExtendabilityVerdict is_k_factor_critical_tutte(const Graph& g, int k);

// Recomputes the violated condition from a verdict's witness and confirms
// the violation is real.  `decider` names which decider produced it (the
// tutte-set inequality differs between extendability and criticality).
enum class DeciderKind { direct, tutte, hall, deletion, factor_critical, factor_critical_tutte };
bool witness_revalidates(const Graph& g, const ExtendabilityVerdict& v,
                         DeciderKind decider);

}  // namespace dsrx
