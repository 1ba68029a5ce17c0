#include "setgraph/perfection.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kernels_impl.hpp"
#include "setgraph/invariants.hpp"
#include "setgraph/kernels.hpp"

namespace setgraph {

namespace {

// Induced paths s, p1, ..., last with every vertex above s; `blocked` is the union of the
// closed neighbourhoods of the path vertices other than s and last.
struct HoleSearch {
  kernel::Rows adj;
  int start = 0;
  int second = 0;
  Mask allowed = 0;
  Mask found = 0;

  bool extend(Mask path, Mask blocked, int last, int length) {
    Mask candidates = adj[last] & allowed & ~path & ~blocked;
    while (candidates) {
      const int u = lowest(candidates);
      candidates &= candidates - 1;
      if (adj[start] & bit(u)) {
        if (length + 1 >= 5 && (length + 1) % 2 == 1 && u > second) {
          found = path | bit(u);
          return true;
        }
        continue;
      }
      if (extend(path | bit(u), blocked | adj[last] | bit(last), u, length + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_weakly_perfect(const Graph& g) { return clique_number(g) == chromatic_number(g); }

std::optional<PerfectionVerdict> is_perfect_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForcePerfectionLimit) return std::nullopt;
  auto adj = g.adjacency();
  auto nonadj = g.complement_adjacency();
  const Mask end = bit(n);
  std::vector<std::uint8_t> omega(end, 0), chi(end, 0);
  for (Mask s = 1; s < end; ++s) {
    const int v = lowest(s);
    omega[s] = std::max<std::uint8_t>(omega[s & ~bit(v)], 1 + omega[s & adj[v]]);
    chi[s] = static_cast<std::uint8_t>(kernel::detail::chromatic_entry(nonadj, chi, s));
    if (omega[s] != chi[s]) return PerfectionVerdict{false, VertexSet(s), false};
  }
  return PerfectionVerdict{};
}

std::optional<VertexSet> find_odd_hole(const Graph& g) {
  auto adj = g.adjacency();
  for (int s = 0; s < g.order(); ++s) {
    const Mask allowed = g.vertices() & ~prefix_mask(s + 1);
    Mask firsts = adj[s] & allowed;
    while (firsts) {
      const int p1 = lowest(firsts);
      firsts &= firsts - 1;
      HoleSearch search{adj, s, p1, allowed};
      if (search.extend(bit(s) | bit(p1), 0, p1, 2)) return VertexSet(search.found);
    }
  }
  return std::nullopt;
}

PerfectionVerdict is_perfect_hole_based(const Graph& g) {
  if (auto hole = find_odd_hole(g)) return {false, hole, false};
  if (auto antihole = find_odd_hole(complement(g))) return {false, antihole, true};
  return {};
}

CoverageVerdict every_vertex_in_maximum_clique(const Graph& g) {
  auto adj = g.adjacency();
  const int omega = clique_number(g);
  for (int v = 0; v < g.order(); ++v)
    if (1 + kernel::max_clique(adj, adj[v]).size != omega) return {false, v};
  return {};
}

PerfectionReport perfection_report(const Graph& g) {
  PerfectionReport r;
  r.weakly_perfect = is_weakly_perfect(g);
  r.bruteforce = is_perfect_bruteforce(g);
  r.hole_based = is_perfect_hole_based(g);
  r.coverage = every_vertex_in_maximum_clique(g);
  return r;
}

}  // namespace setgraph
