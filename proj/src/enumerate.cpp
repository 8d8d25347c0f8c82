#include "dsrx/enumerate.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsrx/canonical.hpp"
#include "dsrx/errors.hpp"
#include "dsrx/graph6.hpp"

namespace dsrx {

namespace {

// Parent representative plus the neighbourhood mask of a newly attached
// vertex, which always takes the next free label.
Graph attach_vertex(const Graph& base, std::uint64_t neighbours) {
  Graph g(base.order() + 1);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  for (int u = 0; u < base.order(); ++u)
    if (neighbours >> u & 1) g.add_edge(u, base.order());
  return g;
}

}  // namespace

void enumerate_graphs(int order, bool connected_only, const GraphSink& sink) {
  if (order < 1)
    throw std::invalid_argument("enumerate_graphs: order must be at least 1");
  if (order > 10)
    throw unsupported_size_error(
        "enumerate_graphs: built-in generation stops at order 10; larger "
        "scans must read a pre-generated graph6 file");

  // Each level holds the canonical keys of every graph of one order.  The
  // key doubles as a decodable graph6 line, and std::set iterates sorted,
  // so the stream order is fixed.
  std::set<std::string> level = {canonical_form(Graph(1))};
  for (int m = 1; m < order; ++m) {
    std::set<std::string> next;
    for (const std::string& key : level) {
      Graph base = parse_graph6(key);
      // Every class of order m+1 turns up: strip the highest label from any
      // member and the remainder is isomorphic to some representative here.
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb)
        next.insert(canonical_form(attach_vertex(base, nb)));
    }
    level = std::move(next);
  }
  for (const std::string& key : level) {
    Graph g = parse_graph6(key);
    if (connected_only && !is_connected(g)) continue;
    if (!sink(g)) return;
  }
}

void enumerate_connected(int order, const GraphSink& sink) {
  enumerate_graphs(order, true, sink);
}

void enumerate_connected_balanced_bipartite(int order, const GraphSink& sink) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument(
        "enumerate_connected_balanced_bipartite: order must be a positive "
        "even number");
  if (order > 12)
    throw unsupported_size_error(
        "enumerate_connected_balanced_bipartite: built-in generation stops "
        "at order 12");
  const int h = order / 2;

  // Colour-aware canonical keys look like "0x3,1x2|<graph6>", and the
  // relabelling behind them keeps colour classes in palette order: rows
  // come out as vertices 0..h-1, columns after them.  So the key itself is
  // enough to rebuild the strip.
  auto strip_graph = [](const std::string& key) {
    return parse_graph6(key.substr(key.find('|') + 1));
  };
  auto strip_key = [h](const Graph& g) {
    std::vector<int> colors(g.order(), 1);
    for (int v = 0; v < h; ++v) colors[v] = 0;
    return canonical_form_colored(g, colors);
  };

  // One-column strips need no search: up to row permutation only the
  // column weight matters.
  std::set<std::string> level;
  for (int weight = 1; weight <= h; ++weight) {
    Graph g(h + 1);
    for (int v = 0; v < weight; ++v) g.add_edge(v, h);
    level.insert(strip_key(g));
  }
  // Attach the remaining columns one at a time.  Empty columns are skipped
  // outright: they could never reach connectivity, and column order is
  // immaterial after deduplication.
  for (int c = 1; c < h; ++c) {
    std::set<std::string> next;
    for (const std::string& key : level) {
      Graph base = strip_graph(key);
      for (std::uint64_t rows = 1; rows < (std::uint64_t{1} << h); ++rows)
        next.insert(strip_key(attach_vertex(base, rows)));
    }
    level = std::move(next);
  }

  // Square strips: keep the connected ones and fold the two sides
  // together.  A connected bipartite graph has a unique bipartition up to
  // swapping, so plain isomorphism is exactly "equal up to row/column
  // permutation and side swap".
  std::map<std::string, Graph> classes;
  for (const std::string& key : level) {
    Graph g = strip_graph(key);
    if (!is_connected(g)) continue;
    g.set_bipartition((std::uint64_t{1} << h) - 1);
    std::string plain = canonical_form(g);
    classes.emplace(std::move(plain), std::move(g));
  }
  for (const auto& entry : classes)
    if (!sink(entry.second)) return;
}

}  // namespace dsrx
