#include "dsrx/extendability.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "dsrx/errors.hpp"
#include "dsrx/matching.hpp"

namespace dsrx {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

std::vector<int> mask_to_vertices(uint64_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

uint64_t vertices_to_mask(const std::vector<int>& vs) {
  uint64_t m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

// Next s-subset in increasing numeric order (Gosper).  Callers guarantee
// the current mask is nonzero.
uint64_t next_combination(uint64_t v) {
  uint64_t c = v & (~v + 1);
  uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

ExtendabilityVerdict parity_failure(int k) {
  ExtendabilityVerdict v;
  v.k = k;
  v.holds = false;
  v.witness = Witness{WitnessKind::parity, {}, {}};
  return v;
}

// A set A with o(G-A) > |A| for a graph without a perfect matching, found
// through the vertices missable by some maximum matching: A is the outside
// neighbourhood of that set.  Polynomial, so usable at any order.
std::vector<int> tutte_set_for_no_pm(const Graph& g) {
  const int nu = max_matching(g).size();
  uint64_t missable = 0;
  for (int v = 0; v < g.order(); ++v) {
    Graph h = g.induced(g.vertex_mask() & ~bit(v));
    if (max_matching(h).size() == nu) missable |= bit(v);
  }
  uint64_t a = 0;
  for (uint64_t m = missable; m; m &= m - 1)
    a |= g.neighbor_mask(std::countr_zero(m));
  a &= ~missable;
  return mask_to_vertices(a);
}

// Shared k = 0 semantics: plain perfect-matching existence, with a
// certificate drawn from the decider's own vocabulary.
ExtendabilityVerdict decide_k0_general(const Graph& g) {
  ExtendabilityVerdict v;
  v.k = 0;
  if (has_perfect_matching(g)) {
    v.holds = true;
    return v;
  }
  v.holds = false;
  if (g.order() % 2 != 0) {
    v.witness = Witness{WitnessKind::parity, {}, {}};
  } else {
    v.witness = Witness{WitnessKind::tutte_set, tutte_set_for_no_pm(g), {}};
  }
  return v;
}

ExtendabilityVerdict decide_k0_bipartite(const Graph& g) {
  ExtendabilityVerdict v;
  v.k = 0;
  if (std::popcount(g.left_mask()) != std::popcount(g.right_mask()))
    return parity_failure(0);
  if (has_perfect_matching(g)) {
    v.holds = true;
    return v;
  }
  v.holds = false;
  auto x = hall_violator(g);  // balanced without a perfect matching: exists
  v.witness = Witness{WitnessKind::hall_set, mask_to_vertices(*x), {}};
  return v;
}

void require_bipartition(const Graph& g, const char* who) {
  if (!g.has_bipartition())
    throw std::invalid_argument(std::string(who) +
                                " requires a recorded bipartition");
}

}  // namespace

ExtendabilityVerdict is_k_extendable_direct(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return decide_k0_general(g);
  if (g.order() % 2 != 0) return parity_failure(k);

  ExtendabilityVerdict v;
  v.k = k;
  if (max_matching(g).size() < k) {
    v.no_k_matching = true;
    return v;
  }

  // Walk the k-matchings in the canonical edge order, lexicographically by
  // edge index, so the first failure reported is always the same one.
  const auto edges = g.edges();
  std::vector<std::pair<int, int>> chosen;
  chosen.reserve(k);
  std::vector<std::pair<int, int>> bad;
  auto rec = [&](auto&& self, size_t start, uint64_t covered) -> bool {
    if (static_cast<int>(chosen.size()) == k) {
      if (!has_perfect_matching(g.induced(g.vertex_mask() & ~covered))) {
        bad = chosen;
        return true;
      }
      return false;
    }
    for (size_t i = start; i < edges.size(); ++i) {
      uint64_t ends = bit(edges[i].first) | bit(edges[i].second);
      if (covered & ends) continue;
      chosen.push_back(edges[i]);
      if (self(self, i + 1, covered | ends)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0, 0)) {
    v.holds = false;
    v.witness = Witness{WitnessKind::bad_matching, {}, std::move(bad)};
  } else {
    v.holds = true;
  }
  return v;
}

ExtendabilityVerdict is_k_extendable_tutte(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return decide_k0_general(g);
  const int n = g.order();
  if (n > 12)
    throw unsupported_size_error(
        "exhaustive subset scan capped at order 12, graph has " +
        std::to_string(n) + " vertices");
  if (n % 2 != 0) return parity_failure(k);

  ExtendabilityVerdict v;
  v.k = k;
  if (max_matching(g).size() < k) {
    v.no_k_matching = true;
    return v;
  }

  // Only sets holding a k-matching matter, so sizes below 2k never qualify.
  for (int size = 2 * k; size <= n; ++size) {
    for (uint64_t s = (uint64_t{1} << size) - 1; s < (uint64_t{1} << n);
         s = next_combination(s)) {
      if (max_matching(g.induced(s)).size() < k) continue;
      if (odd_components(g, s) > std::popcount(s) - 2 * k) {
        v.holds = false;
        v.witness = Witness{WitnessKind::tutte_set, mask_to_vertices(s), {}};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

ExtendabilityVerdict is_k_extendable_hall(const Graph& g, int k) {
  require_bipartition(g, "the neighbourhood decider");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return decide_k0_bipartite(g);
  const auto left = g.left_vertices();
  const int h = static_cast<int>(left.size());
  if (h != std::popcount(g.right_mask())) return parity_failure(k);

  ExtendabilityVerdict v;
  v.k = k;
  if (max_matching(g).size() < k) {
    v.no_k_matching = true;
    return v;
  }

  for (int size = 1; size <= h - k; ++size) {
    for (uint64_t pos = (uint64_t{1} << size) - 1; pos < (uint64_t{1} << h);
         pos = next_combination(pos)) {
      uint64_t x = 0, nbh = 0;
      for (uint64_t m = pos; m; m &= m - 1) {
        int u = left[std::countr_zero(m)];
        x |= bit(u);
        nbh |= g.neighbor_mask(u);
      }
      if (std::popcount(nbh) < size + k) {
        v.holds = false;
        v.witness = Witness{WitnessKind::hall_set, mask_to_vertices(x), {}};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

ExtendabilityVerdict is_k_extendable_deletion(const Graph& g, int k) {
  require_bipartition(g, "the deletion decider");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return decide_k0_bipartite(g);
  const auto left = g.left_vertices();
  const auto right = g.right_vertices();
  const int h = static_cast<int>(left.size());
  if (h != static_cast<int>(right.size())) return parity_failure(k);

  ExtendabilityVerdict v;
  v.k = k;
  // A matching can never exceed the side size, so k > h lands here too.
  if (max_matching(g).size() < k) {
    v.no_k_matching = true;
    return v;
  }

  for (uint64_t lp = (uint64_t{1} << k) - 1; lp < (uint64_t{1} << h);
       lp = next_combination(lp)) {
    uint64_t del_left = 0;
    for (uint64_t m = lp; m; m &= m - 1) del_left |= bit(left[std::countr_zero(m)]);
    for (uint64_t rp = (uint64_t{1} << k) - 1; rp < (uint64_t{1} << h);
         rp = next_combination(rp)) {
      uint64_t del = del_left;
      for (uint64_t m = rp; m; m &= m - 1) del |= bit(right[std::countr_zero(m)]);
      std::vector<int> old_labels;
      Graph rest = g.induced(g.vertex_mask() & ~del, &old_labels);
      if (has_perfect_matching(rest)) continue;
      // Convert the failing deletion into a neighbourhood certificate: the
      // starved set of the remainder also starves in g, because deleting k
      // right vertices can hide at most k neighbours.
      auto x = hall_violator(rest);
      std::vector<int> original;
      for (int u : mask_to_vertices(*x)) original.push_back(old_labels[u]);
      std::sort(original.begin(), original.end());
      v.holds = false;
      v.witness = Witness{WitnessKind::hall_set, std::move(original), {}};
      return v;
    }
  }
  v.holds = true;
  return v;
}

ExtendabilityVerdict is_k_factor_critical(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k > n) throw std::invalid_argument("k cannot exceed the order");
  if (n % 2 != k % 2) return parity_failure(k);
  if (k == 0) return decide_k0_general(g);

  ExtendabilityVerdict v;
  v.k = k;
  for (uint64_t s = (uint64_t{1} << k) - 1; s < (uint64_t{1} << n);
       s = next_combination(s)) {
    std::vector<int> old_labels;
    Graph rest = g.induced(g.vertex_mask() & ~s, &old_labels);
    if (has_perfect_matching(rest)) continue;
    // Lift the remainder's violator T back into g: S u T breaks the
    // criticality inequality o(G-S') <= |S'| - k.
    std::vector<int> combined = mask_to_vertices(s);
    for (int t : tutte_set_for_no_pm(rest)) combined.push_back(old_labels[t]);
    std::sort(combined.begin(), combined.end());
    v.holds = false;
    v.witness = Witness{WitnessKind::tutte_set, std::move(combined), {}};
    return v;
  }
  v.holds = true;
  return v;
}

ExtendabilityVerdict is_k_factor_critical_tutte(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k > n) throw std::invalid_argument("k cannot exceed the order");
  if (n > 12)
    throw unsupported_size_error(
        "exhaustive subset scan capped at order 12, graph has " +
        std::to_string(n) + " vertices");
  if (n % 2 != k % 2) return parity_failure(k);
  if (k == 0) return decide_k0_general(g);

  ExtendabilityVerdict v;
  v.k = k;
  for (int size = k; size <= n; ++size) {
    for (uint64_t s = (uint64_t{1} << size) - 1; s < (uint64_t{1} << n);
         s = next_combination(s)) {
      if (odd_components(g, s) > std::popcount(s) - k) {
        v.holds = false;
        v.witness = Witness{WitnessKind::tutte_set, mask_to_vertices(s), {}};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

namespace {

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::tutte_set: return "tutte-set";
    case WitnessKind::hall_set: return "hall-set";
    case WitnessKind::bad_matching: return "bad-matching";
    case WitnessKind::parity: return "parity";
  }
  return "unknown";
}

nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["kind"] = witness_kind_name(w.kind);
  if (w.kind == WitnessKind::bad_matching) {
    auto arr = nlohmann::ordered_json::array();
    for (auto [u, v] : w.edges) arr.push_back({u, v});
    j["edges"] = std::move(arr);
  } else if (w.kind != WitnessKind::parity) {
    j["vertices"] = w.vertices;
  }
  return j;
}

}  // namespace

std::string witness_json(const Witness& w) { return witness_to_json(w).dump(); }

std::string verdict_json(const ExtendabilityVerdict& v) {
  nlohmann::ordered_json j;
  j["k"] = v.k;
  j["holds"] = v.holds;
  j["no_k_matching"] = v.no_k_matching;
  j["witness"] = v.witness ? witness_to_json(*v.witness)
                           : nlohmann::ordered_json(nullptr);
  return j.dump();
}

bool witness_revalidates(const Graph& g, const ExtendabilityVerdict& v,
                         DeciderKind decider) {
  if (v.holds) return !v.witness.has_value();
  if (v.no_k_matching) return !v.witness && max_matching(g).size() < v.k;
  if (!v.witness) return false;
  const Witness& w = *v.witness;
  const int n = g.order();
  const bool bipartite_decider =
      decider == DeciderKind::hall || decider == DeciderKind::deletion;
  const bool critical = decider == DeciderKind::factor_critical ||
                        decider == DeciderKind::factor_critical_tutte;

  switch (w.kind) {
    case WitnessKind::parity: {
      if (critical) return n % 2 != v.k % 2;
      if (bipartite_decider)
        return g.has_bipartition() &&
               std::popcount(g.left_mask()) != std::popcount(g.right_mask());
      return n % 2 != 0;
    }
    case WitnessKind::tutte_set: {
      uint64_t s = vertices_to_mask(w.vertices);
      int size = static_cast<int>(w.vertices.size());
      if (critical)
        return size >= v.k && odd_components(g, s) > size - v.k;
      // Extendability flavour: the set must actually hold a k-matching for
      // the inequality to mean anything.
      if (v.k > 0 && max_matching(g.induced(s)).size() < v.k) return false;
      return odd_components(g, s) > size - 2 * v.k;
    }
    case WitnessKind::hall_set: {
      if (!g.has_bipartition()) return false;
      uint64_t x = vertices_to_mask(w.vertices);
      if (!x || (x & ~g.left_mask())) return false;
      int size = static_cast<int>(w.vertices.size());
      if (size > std::popcount(g.left_mask()) - v.k) return false;
      uint64_t nbh = 0;
      for (uint64_t m = x; m; m &= m - 1)
        nbh |= g.neighbor_mask(std::countr_zero(m));
      return std::popcount(nbh) < size + v.k;
    }
    case WitnessKind::bad_matching: {
      if (static_cast<int>(w.edges.size()) != v.k) return false;
      uint64_t covered = 0;
      for (auto [a, b] : w.edges) {
        if (!g.has_edge(a, b)) return false;
        uint64_t ends = bit(a) | bit(b);
        if (covered & ends) return false;
        covered |= ends;
      }
      return !has_perfect_matching(g.induced(g.vertex_mask() & ~covered));
    }
  }
  return false;
}

}  // namespace dsrx
