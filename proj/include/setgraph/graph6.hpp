#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "setgraph/graph.hpp"

namespace setgraph {

/// graph6 text for g (single-byte order prefix, so order <= 62).
std::string g6_encode(const Graph& g);

/// Throws Graph6Error on bad length, illegal characters or nonzero padding.
Graph g6_decode(std::string_view text);

struct Graph6Line {
  std::size_t line_number = 0;
  Graph graph;
};

struct Graph6ReadError {
  std::size_t line_number = 0;
  std::string message;
};

struct Graph6File {
  std::vector<Graph6Line> graphs;
  std::vector<Graph6ReadError> errors;
};

/// Newline-delimited graph6; blank lines and a leading ">>graph6<<" header are skipped.
/// Malformed lines are collected in `errors` and reading continues.
Graph6File read_graph6_stream(std::istream& in);

}  // namespace setgraph
