#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "setgraph/colourings.hpp"
#include "setgraph/graph.hpp"

namespace setgraph {

/// Orders above this cannot be enumerated (the pruning table has 2^order entries).
inline constexpr int kPartitionOrderLimit = 20;

struct EnumerationStatus {
  std::uint64_t visited = 0;
  bool complete = true;
  int chi = 0;
};

/// Streams every partition of V into exactly chi(g) nonempty independent sets, once each.
/// Colours are canonical: classes are numbered in order of their least vertex.
/// Stops (complete = false) after `budget` partitions or when visit returns false.
/// Throws std::out_of_range above kPartitionOrderLimit.
EnumerationStatus for_each_chromatic_partition(const Graph& g, const std::function<bool(const Colouring&)>& visit,
                                               std::uint64_t budget = 10'000'000);

std::vector<Colouring> enumerate_chromatic_partitions(const Graph& g, std::uint64_t budget = 10'000'000);

/// `count` chromatic partitions drawn by random descent (each class chosen uniformly among
/// the extendable ones). Deterministic for a given seed; not uniform over partitions.
std::vector<Colouring> sample_chromatic_partitions(const Graph& g, std::size_t count, std::uint64_t seed);

}  // namespace setgraph
