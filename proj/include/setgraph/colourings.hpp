#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "setgraph/graph.hpp"

namespace setgraph {

/// Vertex colouring with colours 1..num_colours, every colour used at least once.
/// Properness is a property of a colouring relative to a graph (see is_proper),
/// not an invariant of this type.
class Colouring {
 public:
  Colouring() = default;

  /// Entry v is the colour of vertex v. Throws std::invalid_argument unless the
  /// used colours are exactly 1..max.
  static Colouring from_assignment(std::vector<int> colours);
  /// Class j (0-based) receives colour j+1. Classes must be nonempty, disjoint and cover 0..order-1.
  static Colouring from_classes(int order, std::span<const Mask> classes);

  int order() const { return static_cast<int>(colours_.size()); }
  int num_colours() const { return static_cast<int>(classes_.size()); }
  int colour_of(int v) const { return colours_.at(v); }
  const std::vector<int>& assignment() const { return colours_; }

  /// Members of colour c (1-based).
  Mask class_mask(int c) const { return classes_.at(c - 1); }
  const std::vector<Mask>& class_masks() const { return classes_; }
  std::vector<VertexSet> classes() const;
  /// Class sizes; entry j is the weight of colour j+1.
  std::vector<int> weights() const;

  friend bool operator==(const Colouring& a, const Colouring& b) { return a.colours_ == b.colours_; }

 private:
  std::vector<int> colours_;
  std::vector<Mask> classes_;
};

/// Orders must match; throws std::invalid_argument otherwise.
bool is_proper(const Graph& g, const Colouring& c);

enum class PeelMode { deterministic, exhaustive };

/// Which maximum independent set a peeling round keeps.
enum class PeelRule {
  min_residual_alpha,  ///< maximax independence colouring
  max_residual_alpha,  ///< rainbow neighbourhood convention
};

struct PeelRound {
  int iteration = 0;  ///< 1-based; the chosen set receives this colour
  VertexSet chosen;
  int residual_alpha = 0;  ///< independence number of what remains after removal
  int tied_candidates = 0;
};

struct ColourCountRange {
  int min = 0;
  int max = 0;
  std::uint64_t branches = 0;
};

struct PeelResult {
  Colouring colouring;
  std::vector<PeelRound> trace;
  std::optional<ColourCountRange> range;  ///< exhaustive mode only
};

struct PeelOptions {
  PeelMode mode = PeelMode::deterministic;
  std::uint64_t branch_budget = 2'000'000;
};

/// Repeatedly removes a maximum independent set of the residual graph, chosen by `rule`,
/// breaking ties by ascending mask. Exhaustive mode also explores every tied choice and
/// reports the range of colour counts (BudgetExceeded if `branch_budget` residual states
/// are expanded). Requires order >= 1.
PeelResult peel_colouring(const Graph& g, PeelRule rule, const PeelOptions& options = {});

inline PeelResult imax_colouring(const Graph& g, const PeelOptions& options = {}) {
  return peel_colouring(g, PeelRule::min_residual_alpha, options);
}
inline PeelResult convention_colouring(const Graph& g, const PeelOptions& options = {}) {
  return peel_colouring(g, PeelRule::max_residual_alpha, options);
}

/// Colour count of the deterministic maximax independence colouring.
int chi_imax(const Graph& g);
/// chi_imax(g) - chi(g).
int imax_number(const Graph& g);

}  // namespace setgraph
