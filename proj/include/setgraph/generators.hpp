#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setgraph/graph.hpp"

namespace setgraph {

/// Label v_{s,i}: the i-th (1-based) s-element subset of {a_1..a_n}.
/// Within fixed s, subsets are in colexicographic order, which for bit masks
/// over {a_1..a_n} is ascending integer order.
struct SetGraphLabel {
  int s = 0;
  int i = 0;
  Mask subset = 0;  ///< bit k set iff a_{k+1} is a member

  friend bool operator==(const SetGraphLabel&, const SetGraphLabel&) = default;
};

struct SetGraph {
  Graph graph;
  std::vector<SetGraphLabel> labels;  ///< indexed by vertex

  /// Vertex index of label (s, i); throws std::out_of_range if absent.
  int vertex(int s, int i) const;
};

inline constexpr int kMaxSetGraphBase = 5;

/// Vertices are the nonempty subsets of an n-set ordered by cardinality then
/// colex; distinct vertices are adjacent iff their subsets intersect. 1 <= n <= 5.
SetGraph set_graph(int n);

Graph path(int n);      ///< n >= 1
Graph cycle(int n);     ///< n >= 3
Graph complete(int n);  ///< n >= 1
Graph null_graph(int n);

/// Cycle on 0..n-1 with pendant n+i attached to cycle vertex i.
Graph sunlet(int n);
/// Cycle on 0..n-1 with outer vertex n+i adjacent to i and (i+1) mod n.
Graph empty_sun(int n);

/// Pendant counts t_i >= 1, one per base vertex.
class ThornSpec {
 public:
  explicit ThornSpec(std::vector<int> counts);
  static ThornSpec uniform(int order, int count = 1);
  /// t_i = i + offset for i = 1..order.
  static ThornSpec ascending(int order, int offset = 0);

  const std::vector<int>& counts() const { return counts_; }
  int size() const { return static_cast<int>(counts_.size()); }
  int total() const;

 private:
  std::vector<int> counts_;
};

/// K_n with t_i pendants on vertex i; pendants numbered in base-vertex order after 0..n-1.
Graph thorn_complete(int n, const ThornSpec& thorns);
/// g with t_i pendants on vertex i.
Graph complete_thorn(const Graph& g, const ThornSpec& thorns);

/// Names accepted by make_family: set-graph, path, cycle, complete, null, sunlet,
/// empty-sun, thorn-complete.
const std::vector<std::string>& family_names();

/// Member n of a named family. thorn-complete uses `thorns` when given, else t_i = 1.
/// Throws std::invalid_argument for unknown names or bad parameters.
Graph make_family(std::string_view name, int n, const std::optional<ThornSpec>& thorns = std::nullopt);

}  // namespace setgraph
