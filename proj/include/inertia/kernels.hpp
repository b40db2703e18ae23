#pragma once

// Elimination kernels behind inertia(). The production kernel is fraction-free
// (Bareiss-style) with OpenMP-parallel Schur updates; the reference kernel is a
// plain serial rational LDL^T kept for cross-checking and benchmarking.

#include <cstddef>
#include <optional>

#include "inertia/bigint.hpp"
#include "inertia/graph.hpp"
#include "inertia/inertia_triple.hpp"

namespace inertia::kernels {

struct KernelOptions {
  /// Active-block size at or above which the Schur update runs in parallel.
  std::size_t parallel_threshold = 96;
};

/// Machine-integer fast path. Returns nullopt if any intermediate minor leaves
/// the int64 range; the caller then reruns on big integers.
std::optional<Inertia> congruence_inertia_i64(const IntSymMatrix& m,
                                              const KernelOptions& options = {});

/// Arbitrary-precision fraction-free congruence elimination.
Inertia congruence_inertia(const SquareMatrix<BigInt>& m, const KernelOptions& options = {});

/// Serial rational LDL^T with first-nonzero pivoting. Independent of the
/// fraction-free path; used in tests and benchmarks only.
Inertia reference_inertia(const SquareMatrix<Rational>& m);

}  // namespace inertia::kernels
