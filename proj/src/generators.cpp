#include "setgraph/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace setgraph {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_order(long long order) {
  if (order > kMaxOrder) throw std::out_of_range("construction would exceed order " + std::to_string(kMaxOrder));
}

}  // namespace

int SetGraph::vertex(int s, int i) const {
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v].s == s && labels[v].i == i) return static_cast<int>(v);
  throw std::out_of_range("no set-graph vertex labelled (" + std::to_string(s) + "," + std::to_string(i) + ")");
}

SetGraph set_graph(int n) {
  require(n >= 1 && n <= kMaxSetGraphBase, "set-graph base size must be in 1.." + std::to_string(kMaxSetGraphBase));
  SetGraph out;
  for (int s = 1; s <= n; ++s) {
    int i = 0;
    for (Mask subset = 1; subset < bit(n); ++subset)
      if (popcount(subset) == s) out.labels.push_back({s, ++i, subset});
  }
  const int order = static_cast<int>(out.labels.size());
  std::vector<Mask> rows(order, 0);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (out.labels[u].subset & out.labels[v].subset) {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
      }
  out.graph = Graph::from_adjacency(std::move(rows));
  return out;
}

Graph path(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  require_order(n);
  std::vector<Mask> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = prefix_mask(n) & ~bit(v);
  return Graph::from_adjacency(std::move(rows));
}

Graph null_graph(int n) {
  require(n >= 0, "order must be nonnegative");
  require_order(n);
  return Graph::from_adjacency(std::vector<Mask>(n, 0));
}

Graph sunlet(int n) {
  require(n >= 3, "sunlet needs a cycle of length at least 3");
  require_order(2LL * n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph::from_edges(2 * n, edges);
}

Graph empty_sun(int n) {
  require(n >= 3, "empty sun needs a cycle of length at least 3");
  require_order(2LL * n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, i);
    edges.emplace_back(n + i, (i + 1) % n);
  }
  return Graph::from_edges(2 * n, edges);
}

ThornSpec::ThornSpec(std::vector<int> counts) : counts_(std::move(counts)) {
  for (std::size_t i = 0; i < counts_.size(); ++i)
    require(counts_[i] >= 1, "thorn count t_" + std::to_string(i + 1) + " must be at least 1");
}

ThornSpec ThornSpec::uniform(int order, int count) { return ThornSpec(std::vector<int>(order, count)); }

ThornSpec ThornSpec::ascending(int order, int offset) {
  std::vector<int> counts(order);
  std::iota(counts.begin(), counts.end(), 1 + offset);
  return ThornSpec(std::move(counts));
}

int ThornSpec::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

Graph complete_thorn(const Graph& g, const ThornSpec& thorns) {
  require(thorns.size() == g.order(), "thorn spec length " + std::to_string(thorns.size()) +
                                          " does not match base order " + std::to_string(g.order()));
  const long long order = static_cast<long long>(g.order()) + thorns.total();
  require_order(order);
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (int v = 0; v < g.order(); ++v)
    for (int k = 0; k < thorns.counts()[v]; ++k) edges.emplace_back(v, next++);
  return Graph::from_edges(static_cast<int>(order), edges);
}

Graph thorn_complete(int n, const ThornSpec& thorns) {
  require(n >= 3, "thorn complete graph needs n >= 3");
  return complete_thorn(complete(n), thorns);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"set-graph", "path",   "cycle",     "complete",
                                                  "null",      "sunlet", "empty-sun", "thorn-complete"};
  return names;
}

Graph make_family(std::string_view name, int n, const std::optional<ThornSpec>& thorns) {
  if (name == "set-graph") return set_graph(n).graph;
  if (name == "path") return path(n);
  if (name == "cycle") return cycle(n);
  if (name == "complete") return complete(n);
  if (name == "null") return null_graph(n);
  if (name == "sunlet") return sunlet(n);
  if (name == "empty-sun") return empty_sun(n);
  if (name == "thorn-complete") return thorn_complete(n, thorns ? *thorns : ThornSpec::uniform(n));
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace setgraph
