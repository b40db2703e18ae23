#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "inertia/graph.hpp"

namespace inertia {

/// Sampling engine. The name is written into every sampling summary.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64";

/// Graph on n vertices whose pair (u,v), u < v, taken in row-major order
/// (0,1),(0,2),...,(0,n-1),(1,2),..., is present iff bit k of `mask` is set.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Calls `visit(g, mask)` for every labeled graph on n <= 11 vertices, mask ascending.
void for_each_labeled_graph(std::size_t n,
                            const std::function<void(const Graph&, std::uint64_t)>& visit);

/// Uniform integer in [0, bound) by rejection on the raw 64-bit output.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// G(n, 1/2): pairs in row-major order, present iff the top bit of the next draw is set.
Graph random_graph(std::size_t n, Rng& rng);

/// Tree with the given Prufer sequence (length n-2, entries < n).
Graph tree_from_prufer(std::size_t n, const std::vector<Vertex>& code);

/// Calls `visit` for every labeled tree on n >= 1 vertices (n^(n-2) of them).
void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Connected graph: a uniform random labeled tree on n vertices plus `extra`
/// distinct random non-tree edges.
Graph random_connected_graph(std::size_t n, std::size_t extra, Rng& rng);

}  // namespace inertia
