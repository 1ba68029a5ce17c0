#include "setgraph/rainbow.hpp"

#include <stdexcept>

#include "setgraph/partitions.hpp"

namespace setgraph {

namespace {

void require_proper(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c)) throw std::invalid_argument("rainbow evaluation needs a proper colouring");
}

bool sees_every_class(const Colouring& c, Mask closed) {
  for (Mask cls : c.class_masks())
    if ((cls & closed) == 0) return false;
  return true;
}

Mask rainbow_mask(const Graph& g, const Colouring& c) {
  Mask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (sees_every_class(c, g.adjacency()[v] | bit(v))) out |= bit(v);
  return out;
}

}  // namespace

bool yields_rainbow(const Graph& g, const Colouring& c, int v) {
  require_proper(g, c);
  return sees_every_class(c, closed_neighbourhood(g, v).mask());
}

RainbowReport rainbow_number(const Graph& g, const Colouring& c) {
  require_proper(g, c);
  const Mask rainbow = rainbow_mask(g, c);
  return {c, VertexSet(rainbow), popcount(rainbow)};
}

RainbowBounds rainbow_bounds(const Graph& g, std::uint64_t budget) {
  RainbowBounds bounds;
  bool first = true;
  const auto status = for_each_chromatic_partition(g, [&](const Colouring& c) {
    const int r = popcount(rainbow_mask(g, c));
    if (first || r < bounds.r_minus) {
      bounds.r_minus = r;
      bounds.witness_min = c;
    }
    if (first || r > bounds.r_plus) {
      bounds.r_plus = r;
      bounds.witness_max = c;
    }
    first = false;
    return true;
  }, budget);
  bounds.exact = status.complete;
  bounds.partitions_scanned = status.visited;
  return bounds;
}

RainbowReport r_imax(const Graph& g) { return rainbow_number(g, imax_colouring(g).colouring); }

}  // namespace setgraph
