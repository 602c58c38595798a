#include "distk/graph6.hpp"

#include <sstream>

namespace distk {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range");
  }
  std::size_t at = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    at = 1;
  } else {
    if (line.size() >= 2 && line[1] == 126) throw Graph6Error("unsupported graph size (n > 258047)");
    if (line.size() < 4) throw Graph6Error("truncated graph6 size field");
    n = ((line[1] - 63L) << 12) | ((line[2] - 63L) << 6) | (line[3] - 63L);
    at = 4;
  }
  if (n > Graph::kMaxVertices) {
    throw Graph6Error("unsupported graph size " + std::to_string(n) + " (max 64)");
  }
  if (n < 1) throw Graph6Error("graph6 graph with no vertices");
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = at + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected) {
    throw Graph6Error("graph6 length " + std::to_string(line.size()) + ", expected " +
                      std::to_string(expected));
  }
  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[at + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = line.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("nonzero graph6 padding bits");
  }
  return g;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace distk
