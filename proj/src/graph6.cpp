#include "dsrx/graph6.hpp"

#include <fstream>
#include <sstream>

#include "dsrx/errors.hpp"

namespace dsrx {

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (line.empty()) throw graph6_error("empty graph6 input", base);

  unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126)
    throw graph6_error("long-form header: orders above 62 are not supported", base);
  if (first < 63 || first > 63 + Graph::max_order)
    throw graph6_error("invalid order byte", base);
  int n = first - 63;

  Graph g(n);
  long long need = static_cast<long long>(n) * (n - 1) / 2;
  std::size_t expect = 1 + static_cast<std::size_t>((need + 5) / 6);
  if (line.size() < expect)
    throw graph6_error("truncated graph6 payload: expected " + std::to_string(expect) +
                           " bytes, got " + std::to_string(line.size()),
                       base + line.size());
  if (line.size() > expect)
    throw graph6_error("trailing bytes after graph6 payload", base + expect);

  long long bit = 0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(line[i]);
    if (ch < 63 || ch > 126) throw graph6_error("payload byte out of range", base + i);
    int val = ch - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      int set = (val >> b) & 1;
      if (bit >= need) {
        if (set) throw graph6_error("nonzero padding bits", base + i);
        continue;
      }
      if (set) {
        // invert the column-major triangle index: bit counts pairs (u, v)
        // for v = 1..n-1, u = 0..v-1
        long long r = bit;
        int v = 1;
        while (r >= v) r -= v, ++v;
        g.add_edge(static_cast<int>(r), v);
      }
    }
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const graph6_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace dsrx
