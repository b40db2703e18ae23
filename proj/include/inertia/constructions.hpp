#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inertia/graph.hpp"

namespace inertia {

/// Vertices are the edges of g in lexicographic order; adjacent when they share an endpoint.
Graph line_graph(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Direct product: (u1,v1) ~ (u2,v2) iff u1 ~ u2 and v1 ~ v2. Pair (u,v) has index u*|h|+v.
Graph tensor_product(const Graph& g, const Graph& h);

/// Kotlov-Lovasz doubling. Layout: copy V1 = [0,n), copy V2 = [n,2n), x = 2n, y = 2n+1.
/// Within and between the copies the edges follow g (no vertex meets its own copy);
/// x is adjacent to all of V2 and to y.
Graph kotlov_lovasz_double(const Graph& g);

/// Appends a vertex with the open neighbourhood of v (plus v itself when closed).
Graph add_twin(const Graph& g, Vertex v, bool closed);

// Named families. Each throws std::invalid_argument on bad parameters.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(std::span<const std::size_t> parts);
Graph star_graph(std::size_t leaves);
Graph triangular_graph(std::size_t n);
/// Prime q with q = 1 (mod 4) only.
Graph paley_graph(std::size_t q);
Graph petersen_graph();
Graph h1_graph();
Graph h2_graph();

/// Family lookup by name: path, cycle, complete, empty, complete_bipartite,
/// complete_multipartite, star, triangular, paley, petersen, H1, H2.
Graph family(std::string_view name, std::span<const std::size_t> params);
const std::vector<std::string>& family_names();

bool is_prime(std::size_t q);

}  // namespace inertia
