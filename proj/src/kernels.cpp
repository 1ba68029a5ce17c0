#include "setgraph/kernels.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"
#include "setgraph/errors.hpp"

namespace setgraph::kernel {

namespace {

struct MaxCliqueSearch {
  Rows adj;
  int best = 0;
  Mask best_set = 0;

  void expand(Mask current, int size, Mask candidates) {
    std::array<int, 64> order{}, bound{};
    const int count = detail::colour_sort(adj, candidates, order, bound);
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      const int v = order[i];
      const Mask next = candidates & adj[v];
      if (next == 0) {
        best = size + 1;
        best_set = current | bit(v);
      } else {
        expand(current | bit(v), size + 1, next);
      }
      candidates &= ~bit(v);
    }
  }
};

struct SizedCliqueSearch {
  Rows adj;
  int target;
  const std::function<void(Mask)>& visit;

  void expand(Mask current, int size, Mask candidates) {
    if (size == target) {
      visit(current);
      return;
    }
    std::array<int, 64> order{}, bound{};
    const int count = detail::colour_sort(adj, candidates, order, bound);
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] < target) return;
      const int v = order[i];
      expand(current | bit(v), size + 1, candidates & adj[v]);
      candidates &= ~bit(v);
    }
  }
};

int saturation(const std::array<Mask, 64>& classes, int used, Mask neighbours) {
  int count = 0;
  for (int c = 0; c < used; ++c) count += (classes[c] & neighbours) != 0;
  return count;
}

int pick_dsatur_vertex(Rows adj, const std::array<Mask, 64>& classes, int used, Mask uncoloured) {
  int chosen = -1, best_sat = -1, best_deg = -1;
  for_each_bit(uncoloured, [&](int v) {
    const int sat = saturation(classes, used, adj[v]);
    const int deg = popcount(adj[v] & uncoloured);
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
      chosen = v;
      best_sat = sat;
      best_deg = deg;
    }
  });
  return chosen;
}

struct DsaturBranchAndBound {
  Rows adj;
  int lower;
  int best;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::array<Mask, 64> classes{};

  // True once a colouring meeting the lower bound has been found.
  bool search(Mask uncoloured, int used) {
    if (++nodes > budget)
      throw BudgetExceeded("chromatic branch and bound exceeded " + std::to_string(budget) + " nodes");
    if (used >= best) return false;
    if (uncoloured == 0) {
      best = used;
      return best <= lower;
    }
    const int v = pick_dsatur_vertex(adj, classes, used, uncoloured);
    for (int c = 0; c <= std::min(used, best - 2); ++c) {
      if (classes[c] & adj[v]) continue;
      classes[c] |= bit(v);
      const bool done = search(uncoloured & ~bit(v), std::max(used, c + 1));
      classes[c] &= ~bit(v);
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

CliqueResult max_clique(Rows adj, Mask within) {
  if (within == 0) return {};
  MaxCliqueSearch search{adj};
  search.expand(0, 0, within);
  return {search.best, search.best_set};
}

void for_each_clique_of_size(Rows adj, Mask within, int size, const std::function<void(Mask)>& visit) {
  if (size == 0) {
    visit(0);
    return;
  }
  SizedCliqueSearch search{adj, size, visit};
  search.expand(0, 0, within);
}

std::vector<Mask> maximum_cliques(Rows adj, Mask within) {
  const int size = max_clique(adj, within).size;
  std::vector<Mask> out;
  for_each_clique_of_size(adj, within, size, [&](Mask c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_maximal_clique(Rows adj, Mask within, const std::function<void(Mask)>& visit) {
  detail::maximal_cliques(adj, within, [&](Mask c) {
    visit(c);
    return false;
  });
}

void for_each_clique(Rows adj, Mask within, const std::function<void(Mask)>& visit) {
  detail::all_cliques(adj, 0, within, [&](Mask c) {
    visit(c);
    return false;
  });
}

int dsatur_colour_count(Rows adj, Mask within) {
  std::array<Mask, 64> classes{};
  int used = 0;
  Mask uncoloured = within;
  while (uncoloured) {
    const int v = pick_dsatur_vertex(adj, classes, used, uncoloured);
    int c = 0;
    while (c < used && (classes[c] & adj[v])) ++c;
    if (c == used) ++used;
    classes[c] |= bit(v);
    uncoloured &= ~bit(v);
  }
  return used;
}

std::vector<std::uint8_t> chromatic_table(Rows nonadj, int order, const std::function<bool(Mask, int)>& stop) {
  if (order < 0 || order > kTableOrderLimit)
    throw std::out_of_range("chromatic table limited to order " + std::to_string(kTableOrderLimit));
  const Mask end = bit(order);
  std::vector<std::uint8_t> table(end, 0);
  for (Mask subset = 1; subset < end; ++subset) {
    table[subset] = static_cast<std::uint8_t>(detail::chromatic_entry(nonadj, table, subset));
    if (stop && stop(subset, table[subset])) break;
  }
  return table;
}

int dsatur_exact(Rows adj, Mask within, int lower, int upper, std::uint64_t node_budget) {
  if (lower >= upper) return upper;
  DsaturBranchAndBound search{adj, lower, upper, node_budget};
  search.search(within, 0);
  return search.best;
}

}  // namespace setgraph::kernel
