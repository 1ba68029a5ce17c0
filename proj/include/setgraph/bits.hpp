#pragma once

#include <bit>
#include <cstdint>

namespace setgraph {

using Mask = std::uint64_t;

inline constexpr int kMaxOrder = 62;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask prefix_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

/// Index of the lowest set bit; m must be nonzero.
constexpr int lowest(Mask m) { return std::countr_zero(m); }

template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

}  // namespace setgraph
