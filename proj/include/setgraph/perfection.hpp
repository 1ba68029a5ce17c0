#pragma once

#include <optional>

#include "setgraph/graph.hpp"

namespace setgraph {

inline constexpr int kBruteForcePerfectionLimit = 15;

struct PerfectionVerdict {
  bool perfect = true;
  /// Offending induced subgraph when imperfect.
  std::optional<VertexSet> witness;
  /// Hole-based checker only: the witness is an odd hole of the complement.
  bool antihole = false;
};

bool is_weakly_perfect(const Graph& g);

/// Checks omega(H) = chi(H) for every induced subgraph H, in ascending mask order; the
/// witness is the least offending vertex mask. Returns nullopt (skipped) above order 15.
std::optional<PerfectionVerdict> is_perfect_bruteforce(const Graph& g);

/// Searches g and its complement for an induced odd cycle of length >= 5.
PerfectionVerdict is_perfect_hole_based(const Graph& g);

/// Induced odd cycle of length >= 5 in g, if any.
std::optional<VertexSet> find_odd_hole(const Graph& g);

struct CoverageVerdict {
  bool covered = true;
  std::optional<int> uncovered_vertex;  ///< least vertex in no maximum clique
};

CoverageVerdict every_vertex_in_maximum_clique(const Graph& g);

struct PerfectionReport {
  bool weakly_perfect = false;
  std::optional<PerfectionVerdict> bruteforce;  ///< nullopt when skipped
  PerfectionVerdict hole_based;
  CoverageVerdict coverage;
};

PerfectionReport perfection_report(const Graph& g);

}  // namespace setgraph
