#pragma once

#include <vector>

#include "inertia/graph.hpp"

namespace inertia {

/// Partitions by equal open neighbourhood N(u) and equal closed neighbourhood N[u].
/// Classes are sorted internally and ordered by least member; singletons included.
struct TwinClasses {
  std::vector<VertexSet> open_classes;
  std::vector<VertexSet> closed_classes;
};

TwinClasses twin_classes(const Graph& g);

/// No open twins and no isolated vertices. Closed twins do not count.
bool is_reduced(const Graph& g);

/// Repeatedly drops the highest-indexed vertex of every open-twin class and every
/// isolated vertex. `origin` maps result vertices back to g.
Subgraph reduce_mapped(const Graph& g);
Graph reduce(const Graph& g);

/// P4-free test by exhaustive scan over 4-subsets.
bool is_cograph(const Graph& g);

inline constexpr std::size_t kDefaultIsomorphismLimit = 32;

/// True iff g is isomorphic to its complement. Throws LimitExceeded above `limit`.
bool is_self_complementary(const Graph& g, std::size_t limit = kDefaultIsomorphismLimit);

/// An isomorphism g -> h as a vertex map, or empty if none exists (orders must match).
std::vector<Vertex> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace inertia
