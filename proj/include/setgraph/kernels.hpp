#pragma once

// Bit-parallel exact search primitives. Every routine works on a row span
// (adjacency or complement adjacency) restricted to a vertex mask, so callers
// can query induced subgraphs without materialising them.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "setgraph/bits.hpp"

namespace setgraph::kernel {

using Rows = std::span<const Mask>;

/// Size and one witness of a maximum clique of the subgraph induced by `within`.
struct CliqueResult {
  int size = 0;
  Mask witness = 0;
};

CliqueResult max_clique(Rows adj, Mask within);

/// Calls visit(clique) for every clique of exactly `size` vertices inside `within`,
/// where `size` must be the clique number of that subgraph. Visit order is unspecified.
void for_each_clique_of_size(Rows adj, Mask within, int size, const std::function<void(Mask)>& visit);

/// All maximum cliques inside `within`, ascending by mask.
std::vector<Mask> maximum_cliques(Rows adj, Mask within);

/// Bron-Kerbosch with pivoting: every maximal clique of the subgraph induced by `within`.
/// The empty subgraph has a single maximal clique, the empty set.
void for_each_maximal_clique(Rows adj, Mask within, const std::function<void(Mask)>& visit);

/// Every clique (including the empty one) contained in `within`.
void for_each_clique(Rows adj, Mask within, const std::function<void(Mask)>& visit);

/// DSATUR greedy colouring count of the subgraph induced by `within`.
int dsatur_colour_count(Rows adj, Mask within);

inline constexpr int kTableOrderLimit = 20;

/// chi of every induced subgraph: entry S is chi(G[S]). Requires order <= kTableOrderLimit.
/// Entries are filled in ascending mask order; `stop` (if set) is consulted after each
/// entry and ends the build early when it returns true.
std::vector<std::uint8_t> chromatic_table(Rows nonadj, int order,
                                          const std::function<bool(Mask, int)>& stop = {});

/// Exact colouring by DSATUR branch and bound. Returns the least k in [lower, upper]
/// such that the subgraph is k-colourable, assuming it is `upper`-colourable.
/// Throws BudgetExceeded after `node_budget` search nodes.
int dsatur_exact(Rows adj, Mask within, int lower, int upper, std::uint64_t node_budget);

}  // namespace setgraph::kernel
