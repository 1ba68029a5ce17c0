#include "setgraph/colourings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "setgraph/errors.hpp"
#include "setgraph/invariants.hpp"
#include "setgraph/kernels.hpp"

namespace setgraph {

Colouring Colouring::from_assignment(std::vector<int> colours) {
  if (colours.size() > static_cast<std::size_t>(kMaxOrder)) throw std::invalid_argument("colouring larger than maximum order");
  int top = 0;
  for (int c : colours) {
    if (c < 1) throw std::invalid_argument("colour indices start at 1");
    top = std::max(top, c);
  }
  Colouring out;
  out.classes_.assign(top, 0);
  for (std::size_t v = 0; v < colours.size(); ++v) out.classes_[colours[v] - 1] |= bit(static_cast<int>(v));
  for (int c = 0; c < top; ++c)
    if (out.classes_[c] == 0) throw std::invalid_argument("colour " + std::to_string(c + 1) + " is unused");
  out.colours_ = std::move(colours);
  return out;
}

Colouring Colouring::from_classes(int order, std::span<const Mask> classes) {
  if (order < 0 || order > kMaxOrder) throw std::invalid_argument("colouring order out of range");
  std::vector<int> colours(order, 0);
  Mask seen = 0;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (classes[j] == 0) throw std::invalid_argument("empty colour class");
    if (classes[j] & seen) throw std::invalid_argument("colour classes overlap");
    if (classes[j] & ~prefix_mask(order)) throw std::invalid_argument("colour class exceeds order");
    seen |= classes[j];
    for_each_bit(classes[j], [&](int v) { colours[v] = static_cast<int>(j) + 1; });
  }
  if (seen != prefix_mask(order)) throw std::invalid_argument("colour classes do not cover every vertex");
  return from_assignment(std::move(colours));
}

std::vector<VertexSet> Colouring::classes() const {
  std::vector<VertexSet> out;
  for (Mask m : classes_) out.emplace_back(m);
  return out;
}

std::vector<int> Colouring::weights() const {
  std::vector<int> out;
  for (Mask m : classes_) out.push_back(popcount(m));
  return out;
}

bool is_proper(const Graph& g, const Colouring& c) {
  if (g.order() != c.order()) throw std::invalid_argument("colouring order does not match graph order");
  auto adj = g.adjacency();
  for (Mask cls : c.class_masks()) {
    bool clash = false;
    for_each_bit(cls, [&](int v) { clash = clash || (adj[v] & cls); });
    if (clash) return false;
  }
  return true;
}

namespace {

struct Candidate {
  Mask set;
  int residual_alpha;
};

/// Maximum independent sets of G[residual] that the rule keeps, ascending by mask,
/// plus the number of such ties.
std::vector<Candidate> select(kernel::Rows nonadj, Mask residual, PeelRule rule) {
  std::vector<Candidate> all;
  for (Mask x : kernel::maximum_cliques(nonadj, residual))
    all.push_back({x, kernel::max_clique(nonadj, residual & ~x).size});
  int target = all.front().residual_alpha;
  for (const auto& c : all)
    target = rule == PeelRule::min_residual_alpha ? std::min(target, c.residual_alpha) : std::max(target, c.residual_alpha);
  std::erase_if(all, [&](const Candidate& c) { return c.residual_alpha != target; });
  return all;
}

struct RangeSearch {
  kernel::Rows nonadj;
  PeelRule rule;
  std::uint64_t budget;
  std::uint64_t branches = 0;
  std::unordered_map<Mask, std::pair<int, int>> memo;

  std::pair<int, int> rounds(Mask residual) {
    if (residual == 0) return {0, 0};
    if (auto it = memo.find(residual); it != memo.end()) return it->second;
    if (++branches > budget)
      throw BudgetExceeded("exhaustive peeling exceeded " + std::to_string(budget) + " residual states");
    std::pair<int, int> range{kMaxOrder + 1, 0};
    for (const auto& c : select(nonadj, residual, rule)) {
      auto [lo, hi] = rounds(residual & ~c.set);
      range.first = std::min(range.first, lo + 1);
      range.second = std::max(range.second, hi + 1);
    }
    memo.emplace(residual, range);
    return range;
  }
};

}  // namespace

PeelResult peel_colouring(const Graph& g, PeelRule rule, const PeelOptions& options) {
  if (g.order() == 0) throw std::invalid_argument("peeling colourings need at least one vertex");
  auto nonadj = g.complement_adjacency();
  PeelResult result;
  std::vector<Mask> classes;
  Mask residual = g.vertices();
  while (residual) {
    const auto ties = select(nonadj, residual, rule);
    const Candidate& pick = ties.front();
    classes.push_back(pick.set);
    result.trace.push_back({static_cast<int>(classes.size()), VertexSet(pick.set), pick.residual_alpha,
                            static_cast<int>(ties.size())});
    residual &= ~pick.set;
  }
  result.colouring = Colouring::from_classes(g.order(), classes);
  if (options.mode == PeelMode::exhaustive) {
    RangeSearch search{nonadj, rule, options.branch_budget, 0, {}};
    auto [lo, hi] = search.rounds(g.vertices());
    result.range = ColourCountRange{lo, hi, search.branches};
  }
  return result;
}

int chi_imax(const Graph& g) { return imax_colouring(g).colouring.num_colours(); }

int imax_number(const Graph& g) { return chi_imax(g) - chromatic_number(g); }

}  // namespace setgraph
