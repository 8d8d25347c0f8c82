#pragma once

#include <functional>

#include "dsrx/graph.hpp"

namespace dsrx {

// Consumer for a streamed enumeration.  Return false to stop early.
using GraphSink = std::function<bool(const Graph&)>;

// Streams exactly one representative per isomorphism class of simple graphs
// of the given order, in a fixed deterministic order.  With connected_only
// set, only the connected classes are emitted; the generator still grows
// through disconnected intermediates, because removing a vertex from a
// connected graph can disconnect it.  order <= 10 (the star-shaped growth
// is quadratic in the class count, which explodes beyond that).
void enumerate_graphs(int order, bool connected_only, const GraphSink& sink);

// Shorthand for the connected stream.
void enumerate_connected(int order, const GraphSink& sink);

// Streams one representative per isomorphism class of connected bipartite
// graphs with both sides of size order/2, each carrying its recorded
// bipartition.  Representatives are grown as biadjacency strips, one right
// vertex at a time, deduplicated with the colour-aware canonical form so
// row and column relabellings collapse; side swaps collapse in a final
// plain-isomorphism pass.  order must be even and at most 12.
void enumerate_connected_balanced_bipartite(int order, const GraphSink& sink);

}  // namespace dsrx
