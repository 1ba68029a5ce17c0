#include "setgraph/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "setgraph/kernels.hpp"

namespace setgraph {

namespace {

std::vector<VertexSet> as_vertex_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(m);
  return out;
}

std::uint64_t count_cliques_of_max_size(kernel::Rows rows, Mask within) {
  const int size = kernel::max_clique(rows, within).size;
  std::uint64_t count = 0;
  kernel::for_each_clique_of_size(rows, within, size, [&](Mask) { ++count; });
  return count;
}

}  // namespace

int clique_number(const Graph& g) { return kernel::max_clique(g.adjacency(), g.vertices()).size; }

std::uint64_t count_maximum_cliques(const Graph& g) {
  if (g.order() == 0) return 0;
  return count_cliques_of_max_size(g.adjacency(), g.vertices());
}

std::vector<VertexSet> maximum_cliques(const Graph& g) {
  if (g.order() == 0) return {};
  return as_vertex_sets(kernel::maximum_cliques(g.adjacency(), g.vertices()));
}

int independence_number(const Graph& g) { return kernel::max_clique(g.complement_adjacency(), g.vertices()).size; }

std::vector<VertexSet> enumerate_maximum_independent_sets(const Graph& g) {
  if (g.order() == 0) return {};
  return as_vertex_sets(kernel::maximum_cliques(g.complement_adjacency(), g.vertices()));
}

int chromatic_number(const Graph& g, const ChromaticOptions& options) {
  const int n = g.order();
  if (n == 0) return 0;
  const int lower = clique_number(g);
  if (lower == n) return n;
  const int upper = kernel::dsatur_colour_count(g.adjacency(), g.vertices());
  if (lower == upper) return lower;
  if (lower <= 2 && is_bipartite(g)) return 2;
  if (n <= std::min(options.table_order_limit, kernel::kTableOrderLimit))
    return kernel::chromatic_table(g.complement_adjacency(), n).back();
  return kernel::dsatur_exact(g.adjacency(), g.vertices(), std::max(lower, 3), upper, options.node_budget);
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("minimum degree of the empty graph is undefined");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("maximum degree of the empty graph is undefined");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

InvariantReport invariant_report(const Graph& g, const ChromaticOptions& options) {
  InvariantReport r;
  r.order = g.order();
  r.size = g.size();
  r.omega = clique_number(g);
  r.alpha = independence_number(g);
  r.chi = chromatic_number(g, options);
  r.max_clique_count = count_maximum_cliques(g);
  r.max_independent_set_count = g.order() == 0 ? 0 : count_cliques_of_max_size(g.complement_adjacency(), g.vertices());
  if (g.order() > 0) {
    r.min_degree = min_degree(g);
    r.max_degree = max_degree(g);
  }
  return r;
}

}  // namespace setgraph
