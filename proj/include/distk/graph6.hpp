#pragma once

#include <string>
#include <string_view>

#include "distk/graph.hpp"

namespace distk {

class Graph6Error : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// graph6 line (no newline). n <= 62 uses one size byte n + 63; 63 and 64 use
/// the '~' prefix and three 6-bit bytes. The upper triangle is packed in
/// column order x(0,1), x(0,2), x(1,2), x(0,3), ..., 6 bits per byte, each +63,
/// zero-padded.
std::string to_graph6(const Graph& g);

/// Parses one graph6 line; a leading ">>graph6<<" header and a trailing
/// newline are accepted.
Graph from_graph6(std::string_view line);

/// Graphviz rendering with vertex ids as node names.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace distk
