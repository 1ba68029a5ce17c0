#pragma once

// Header-only search templates shared by the solver translation units. Visitors
// return true to stop the enumeration early.

#include <array>

#include "setgraph/kernels.hpp"

namespace setgraph::kernel::detail {

template <typename Visit>
bool bron_kerbosch(Rows rows, Mask chosen, Mask candidates, Mask excluded, Visit& visit) {
  if (candidates == 0 && excluded == 0) return visit(chosen);
  int pivot = -1, pivot_score = -1;
  for_each_bit(candidates | excluded, [&](int u) {
    const int score = popcount(candidates & rows[u]);
    if (score > pivot_score) {
      pivot_score = score;
      pivot = u;
    }
  });
  Mask branch = candidates & ~rows[pivot];
  while (branch) {
    const int v = lowest(branch);
    branch &= branch - 1;
    if (bron_kerbosch(rows, chosen | bit(v), candidates & rows[v], excluded & rows[v], visit)) return true;
    candidates &= ~bit(v);
    excluded |= bit(v);
  }
  return false;
}

template <typename Visit>
bool maximal_cliques(Rows rows, Mask within, Visit&& visit) {
  return bron_kerbosch(rows, 0, within, 0, visit);
}

template <typename Visit>
bool all_cliques_from(Rows rows, Mask chosen, Mask candidates, Visit& visit) {
  if (visit(chosen)) return true;
  while (candidates) {
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    if (all_cliques_from(rows, chosen | bit(v), candidates & rows[v], visit)) return true;
  }
  return false;
}

/// Every clique C with base ⊆ C ⊆ base ∪ candidates; candidates must be common neighbours of base.
template <typename Visit>
bool all_cliques(Rows rows, Mask base, Mask candidates, Visit&& visit) {
  return all_cliques_from(rows, base, candidates, visit);
}

/// Greedy sequential colouring of `candidates` used as the clique-search bound:
/// fills order[] and bound[] so that bound[i] colours suffice for order[0..i].
inline int colour_sort(Rows adj, Mask candidates, std::array<int, 64>& order, std::array<int, 64>& bound) {
  int count = 0, colour = 0;
  while (candidates) {
    ++colour;
    Mask available = candidates;
    while (available) {
      const int v = lowest(available);
      available &= ~adj[v] & ~bit(v);
      candidates &= ~bit(v);
      order[count] = v;
      bound[count] = colour;
      ++count;
    }
  }
  return count;
}

/// chi(G[subset]) from the table entries of all proper subsets that contain
/// fewer vertices; `nonadj` rows are the complement adjacency.
template <typename Table>
int chromatic_entry(Rows nonadj, const Table& table, Mask subset) {
  if (subset == 0) return 0;
  const int v = lowest(subset);
  const int floor = table[subset & ~bit(v)];
  int best = 255;
  maximal_cliques(nonadj, subset & nonadj[v], [&](Mask independent) {
    const int value = 1 + table[subset & ~(independent | bit(v))];
    if (value < best) best = value;
    return best == floor;
  });
  return best;
}

}  // namespace setgraph::kernel::detail
