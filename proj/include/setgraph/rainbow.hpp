#pragma once

#include <cstdint>

#include "setgraph/colourings.hpp"
#include "setgraph/graph.hpp"

namespace setgraph {

/// True iff N[v] meets every colour class of c. Throws std::invalid_argument if c is
/// not proper on g, std::out_of_range for a bad vertex.
bool yields_rainbow(const Graph& g, const Colouring& c, int v);

struct RainbowReport {
  Colouring colouring;
  VertexSet rainbow_vertices;
  int r = 0;
};

RainbowReport rainbow_number(const Graph& g, const Colouring& c);

struct RainbowBounds {
  int r_minus = 0;
  int r_plus = 0;
  bool exact = true;  ///< false when the partition stream was truncated by the budget
  std::uint64_t partitions_scanned = 0;
  Colouring witness_min;
  Colouring witness_max;
};

/// Minimum and maximum rainbow neighbourhood number over all chromatic partitions.
RainbowBounds rainbow_bounds(const Graph& g, std::uint64_t budget = 10'000'000);

/// Rainbow neighbourhood number under the deterministic maximax independence colouring.
RainbowReport r_imax(const Graph& g);

}  // namespace setgraph
