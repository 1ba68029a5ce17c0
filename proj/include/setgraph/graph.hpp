#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "setgraph/bits.hpp"

namespace setgraph {

using Edge = std::pair<int, int>;

/// A set of vertex indices of some graph, stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask members) : members_(members) {}
  VertexSet(std::initializer_list<int> vertices);

  constexpr Mask mask() const { return members_; }
  constexpr int size() const { return popcount(members_); }
  constexpr bool empty() const { return members_ == 0; }
  constexpr bool contains(int v) const { return v >= 0 && v < 64 && (members_ >> v) & 1; }
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.members_ <=> b.members_; }

 private:
  Mask members_ = 0;
};

/// Immutable simple undirected graph on vertices 0..order-1, order <= 62.
class Graph {
 public:
  /// The order-0 graph.
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, std::out_of_range on bad indices.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges);

  /// Rows must be symmetric, loop-free and within range.
  static Graph from_adjacency(std::vector<Mask> rows);

  int order() const { return order_; }
  std::size_t size() const;
  Mask vertices() const { return prefix_mask(order_); }

  Mask neighbours(int v) const { return adj_[check(v)]; }
  Mask non_neighbours(int v) const { return nonadj_[check(v)]; }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1; }
  int degree(int v) const { return popcount(adj_[check(v)]); }

  std::span<const Mask> adjacency() const { return adj_; }
  /// Complement rows: vertices distinct from v and not adjacent to it.
  std::span<const Mask> complement_adjacency() const { return nonadj_; }

  /// Edges (u, v) with u < v, ordered by v then u.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  explicit Graph(std::vector<Mask> rows);
  int check(int v) const;

  int order_ = 0;
  std::vector<Mask> adj_;
  std::vector<Mask> nonadj_;
};

inline Graph build_graph(int order, std::span<const Edge> edges) { return Graph::from_edges(order, edges); }

/// Subgraph induced by s, reindexed in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
/// Adds vertex n adjacent to every vertex of g.
Graph join_k1(const Graph& g);
VertexSet closed_neighbourhood(const Graph& g, int v);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace setgraph
