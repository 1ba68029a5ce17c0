#include "setgraph/graph.hpp"

#include <stdexcept>
#include <string>

namespace setgraph {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= 64) throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    members_ |= bit(v);
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_bit(members_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(std::vector<Mask> rows) : order_(static_cast<int>(rows.size())), adj_(std::move(rows)) {
  nonadj_.resize(adj_.size());
  const Mask all = prefix_mask(order_);
  for (int v = 0; v < order_; ++v) nonadj_[v] = all & ~adj_[v] & ~bit(v);
}

int Graph::check(int v) const {
  if (v < 0 || v >= order_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(order_));
  return v;
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 0 || order > kMaxOrder)
    throw std::out_of_range("graph order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxOrder));
  std::vector<Mask> rows(order, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside graph of order " +
                              std::to_string(order));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_edges(int order, std::initializer_list<Edge> edges) {
  return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(std::vector<Mask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxOrder) throw std::out_of_range("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  const Mask all = prefix_mask(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw std::out_of_range("adjacency row " + std::to_string(v) + " references missing vertices");
    if (rows[v] & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for_each_bit(rows[v], [&](int u) {
      if (!(rows[u] & bit(v))) throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
    });
  }
  return Graph(std::move(rows));
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (Mask row : adj_) twice += popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < order_; ++v)
    for_each_bit(adj_[v] & prefix_mask(v), [&](int u) { out.emplace_back(u, v); });
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.mask() & ~g.vertices()) throw std::out_of_range("vertex set exceeds graph order");
  const std::vector<int> keep = s.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Mask> rows(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for_each_bit(g.neighbours(keep[i]) & s.mask(), [&](int u) { rows[i] |= bit(index[u]); });
  return Graph::from_adjacency(std::move(rows));
}

Graph complement(const Graph& g) {
  auto rows = g.complement_adjacency();
  return Graph::from_adjacency({rows.begin(), rows.end()});
}

Graph join_k1(const Graph& g) {
  const int n = g.order();
  if (n + 1 > kMaxOrder) throw std::out_of_range("join would exceed maximum order");
  auto adj = g.adjacency();
  std::vector<Mask> rows(adj.begin(), adj.end());
  for (Mask& row : rows) row |= bit(n);
  rows.push_back(prefix_mask(n));
  return Graph::from_adjacency(std::move(rows));
}

VertexSet closed_neighbourhood(const Graph& g, int v) { return VertexSet(g.neighbours(v) | bit(v)); }

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  Mask seen = bit(0), frontier = bit(0);
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.adjacency()[v]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

bool is_bipartite(const Graph& g) {
  auto adj = g.adjacency();
  Mask unseen = g.vertices();
  while (unseen) {
    const int root = lowest(unseen);
    Mask side[2] = {bit(root), 0};
    Mask frontier = bit(root);
    int parity = 0;
    unseen &= ~bit(root);
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= adj[v]; });
      if (next & side[parity]) return false;
      next &= unseen;
      parity ^= 1;
      side[parity] |= next;
      unseen &= ~next;
      frontier = next;
    }
  }
  return true;
}

}  // namespace setgraph
