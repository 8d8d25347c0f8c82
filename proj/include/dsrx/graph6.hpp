#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsrx/graph.hpp"

namespace dsrx {

// Standard graph6 short form (orders 0..62): header byte n+63 followed by
// the upper triangle of the adjacency matrix in column-major order, packed
// six bits per byte, each byte offset by 63.
std::string write_graph6(const Graph& g);

// Parses one graph6 token.  An optional ">>graph6<<" prefix is accepted.
// Throws graph6_error with the offending byte offset on malformed input;
// long-form headers (orders > 62) are rejected as unsupported.
Graph parse_graph6(std::string_view line);

// One graph per line; blank lines are skipped.  Parse errors are rethrown
// with the line number prepended.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace dsrx
