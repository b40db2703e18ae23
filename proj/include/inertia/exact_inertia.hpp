#pragma once

#include <cstddef>

#include "inertia/bigint.hpp"
#include "inertia/graph.hpp"
#include "inertia/inertia_triple.hpp"

namespace inertia {

using RationalSymMatrix = SquareMatrix<Rational>;
using BigIntSymMatrix = SquareMatrix<BigInt>;

/// Exact inertia by symmetric congruence elimination. Throws std::invalid_argument
/// on an asymmetric matrix. The 0x0 matrix has inertia (0,0,0).
Inertia inertia(const IntSymMatrix& m);
Inertia inertia(const BigIntSymMatrix& m);
Inertia inertia(const RationalSymMatrix& m);

/// Inertia of m - c*I: eigenvalues above, at, and below c.
Inertia shifted_inertia(const IntSymMatrix& m, const Rational& c);

/// Number of eigenvalues in the interval between a and b, each end open or closed.
/// Throws std::invalid_argument if a > b.
std::size_t count_eigenvalues_in_interval(const IntSymMatrix& m, const Rational& a,
                                          const Rational& b, bool include_a, bool include_b);

/// Adjacency inertia of a graph.
Inertia graph_inertia(const Graph& g);

}  // namespace inertia
