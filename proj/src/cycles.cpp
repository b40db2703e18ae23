#include "inertia/cycles.hpp"

#include <bit>
#include <vector>

namespace inertia {

CycleCounts count_cycles_mod4(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit)
    throw LimitExceeded("cycle enumeration limited to order " + std::to_string(limit) +
                        ", graph has order " + std::to_string(n));
  if (n < 3) return {};

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }

  // paths[mask * n + v]: simple paths from the least vertex of mask to v covering
  // mask. Rooting every cycle at its least vertex counts it once per direction.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint64_t> paths(masks * n, 0);
  std::vector<std::uint64_t> by_length(n + 1, 0);
  for (std::size_t s = 0; s < n; ++s) paths[(std::size_t{1} << s) * n + s] = 1;

  for (std::size_t mask = 1; mask < masks; ++mask) {
    const auto start = static_cast<std::size_t>(std::countr_zero(mask));
    const auto length = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t v = start; v < n; ++v) {
      const std::uint64_t count = paths[mask * n + v];
      if (count == 0) continue;
      if (length >= 3 && (adj[v] >> start & 1U)) by_length[length] += count;
      std::uint32_t next = adj[v] & ~static_cast<std::uint32_t>(mask);
      next &= ~((std::uint32_t{1} << start) - 1) & ~(std::uint32_t{1} << start);
      while (next) {
        const auto w = static_cast<std::size_t>(std::countr_zero(next));
        next &= next - 1;
        paths[(mask | (std::size_t{1} << w)) * n + w] += count;
      }
    }
  }

  CycleCounts out;
  for (std::size_t len = 3; len <= n; len += 2) {
    const std::uint64_t cycles = by_length[len] / 2;
    out.c1 += cycles;
    (len % 4 == 3 ? out.c3 : out.c5) += cycles;
  }
  return out;
}

}  // namespace inertia
