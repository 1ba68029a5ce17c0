#pragma once

#include <cstdint>
#include <vector>

#include "setgraph/graph.hpp"

namespace setgraph {

struct ChromaticOptions {
  /// Orders up to this use the subset dynamic programme; larger ones branch and bound.
  int table_order_limit = 20;
  /// Search nodes allowed for branch and bound before BudgetExceeded is thrown.
  std::uint64_t node_budget = 50'000'000;
};

int clique_number(const Graph& g);
std::uint64_t count_maximum_cliques(const Graph& g);
/// Ascending by mask.
std::vector<VertexSet> maximum_cliques(const Graph& g);

int independence_number(const Graph& g);
/// Every independent set of size alpha(g), ascending by mask.
std::vector<VertexSet> enumerate_maximum_independent_sets(const Graph& g);

/// Exact chromatic number; order 0 gives 0. May throw BudgetExceeded above the table limit.
int chromatic_number(const Graph& g, const ChromaticOptions& options = {});

/// Throws std::invalid_argument on the order-0 graph.
int min_degree(const Graph& g);
int max_degree(const Graph& g);

struct InvariantReport {
  int order = 0;
  std::size_t size = 0;
  int omega = 0;
  int alpha = 0;
  int chi = 0;
  std::uint64_t max_clique_count = 0;
  std::uint64_t max_independent_set_count = 0;
  int min_degree = 0;
  int max_degree = 0;
};

InvariantReport invariant_report(const Graph& g, const ChromaticOptions& options = {});

}  // namespace setgraph
