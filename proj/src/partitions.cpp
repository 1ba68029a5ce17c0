#include "setgraph/partitions.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"
#include "setgraph/kernels.hpp"

namespace setgraph {

namespace {

class PartitionSpace {
 public:
  explicit PartitionSpace(const Graph& g) : g_(g) {
    if (g.order() > kPartitionOrderLimit)
      throw std::out_of_range("chromatic partitions limited to order " + std::to_string(kPartitionOrderLimit));
    table_ = kernel::chromatic_table(g.complement_adjacency(), g.order());
    chi_ = table_.back();
  }

  int chi() const { return chi_; }

  /// Independent sets containing the least vertex of `remaining` whose removal leaves
  /// something partitionable into exactly `classes - 1` nonempty independent sets.
  template <typename Visit>
  bool for_each_extendable_class(Mask remaining, int classes, Visit&& visit) const {
    const int v = lowest(remaining);
    auto nonadj = g_.complement_adjacency();
    return kernel::detail::all_cliques(nonadj, bit(v), remaining & nonadj[v], [&](Mask cls) {
      const Mask rest = remaining & ~cls;
      if (popcount(rest) < classes - 1 || table_[rest] > classes - 1) return false;
      if (rest == 0 && classes != 1) return false;
      return visit(cls, rest);
    });
  }

 private:
  const Graph& g_;
  std::vector<std::uint8_t> table_;
  int chi_ = 0;
};

struct Enumerator {
  const PartitionSpace& space;
  int order;
  const std::function<bool(const Colouring&)>& visit;
  std::uint64_t budget;
  EnumerationStatus status;
  std::vector<Mask> classes;

  // True when enumeration must stop.
  bool descend(Mask remaining, int left) {
    if (remaining == 0) {
      if (status.visited >= budget) {
        status.complete = false;
        return true;
      }
      ++status.visited;
      if (!visit(Colouring::from_classes(order, classes))) {
        status.complete = false;
        return true;
      }
      return false;
    }
    return space.for_each_extendable_class(remaining, left, [&](Mask cls, Mask rest) {
      classes.push_back(cls);
      const bool stop = descend(rest, left - 1);
      classes.pop_back();
      return stop;
    });
  }
};

}  // namespace

EnumerationStatus for_each_chromatic_partition(const Graph& g, const std::function<bool(const Colouring&)>& visit,
                                               std::uint64_t budget) {
  PartitionSpace space(g);
  Enumerator e{space, g.order(), visit, budget, {}, {}};
  e.status.chi = space.chi();
  e.descend(g.vertices(), space.chi());
  return e.status;
}

std::vector<Colouring> enumerate_chromatic_partitions(const Graph& g, std::uint64_t budget) {
  std::vector<Colouring> out;
  for_each_chromatic_partition(g, [&](const Colouring& c) {
    out.push_back(c);
    return true;
  }, budget);
  return out;
}

std::vector<Colouring> sample_chromatic_partitions(const Graph& g, std::size_t count, std::uint64_t seed) {
  PartitionSpace space(g);
  std::mt19937_64 rng(seed);
  std::vector<Colouring> out;
  out.reserve(count);
  std::vector<Mask> options;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Mask> classes;
    Mask remaining = g.vertices();
    int left = space.chi();
    while (remaining) {
      options.clear();
      space.for_each_extendable_class(remaining, left, [&](Mask cls, Mask) {
        options.push_back(cls);
        return false;
      });
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const Mask cls = options[pick(rng)];
      classes.push_back(cls);
      remaining &= ~cls;
      --left;
    }
    out.push_back(Colouring::from_classes(g.order(), classes));
  }
  return out;
}

}  // namespace setgraph
