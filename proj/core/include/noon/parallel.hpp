#pragma once

// Order-independent reductions. Monte Carlo accumulation must yield the same
// floating-point result for any worker count, so sums are always combined
// along a fixed-shape binary tree over block (or element) indices; threads
// only decide who computes a block, never the combination order.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace noon {

// Samples per reduction leaf; part of the numeric contract of MC results.
inline constexpr std::size_t kMonteCarloBlock = 1024;

// Runs fn(i) for i in [0, count) on `threads` workers (static round-robin).
void for_each_index(std::size_t count, int threads,
                    const std::function<void(std::size_t)>& fn);

// Combines blocks[0..n) pairwise in place and returns the root. The tree
// shape depends only on n.
template <typename T, typename Combine>
T pairwise_combine(std::vector<T>&& blocks, Combine&& combine) {
  const std::size_t n = blocks.size();
  for (std::size_t stride = 1; stride < n; stride *= 2) {
    for (std::size_t i = 0; i + stride < n; i += 2 * stride) {
      combine(blocks[i], blocks[i + stride]);
    }
  }
  return std::move(blocks.front());
}

// Fixed-shape pairwise sum of a span of doubles.
double pairwise_sum(std::span<const double> values);

}  // namespace noon
