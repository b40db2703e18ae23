#pragma once

#include <cstdint>

#include "inertia/graph.hpp"

namespace inertia {

/// Odd simple cycles, each counted once, split by length mod 4.
struct CycleCounts {
  std::uint64_t c1 = 0;  // all odd cycles
  std::uint64_t c3 = 0;  // length = 3 (mod 4)
  std::uint64_t c5 = 0;  // length = 1 (mod 4)

  friend bool operator==(const CycleCounts&, const CycleCounts&) = default;
};

inline constexpr std::size_t kDefaultCycleLimit = 16;

/// Throws LimitExceeded when g.order() > limit.
CycleCounts count_cycles_mod4(const Graph& g, std::size_t limit = kDefaultCycleLimit);

}  // namespace inertia
