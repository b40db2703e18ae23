#pragma once

#include <stdexcept>
#include <vector>

#include "inertia/graph.hpp"
#include "inertia/inertia_triple.hpp"

namespace inertia {

/// Numerical eigenvalues in descending order. Never used to decide whether an
/// eigenvalue is zero; the exact path owns that.
struct FloatSpectrum {
  std::vector<double> eigenvalues;
  /// Every reported eigenvalue lies within this distance of a true eigenvalue.
  double residual_bound = 0.0;
};

class EigenSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FloatSpectrum float_spectrum(const IntSymMatrix& m);

/// Inertia read off a float spectrum, classifying |lambda| <= tolerance as zero.
/// Approximate by construction; only for opt-in use above the exact limit.
Inertia approximate_inertia(const FloatSpectrum& spectrum, double tolerance);

/// Slack on floating-point energy comparisons.
inline constexpr double kEnergyTolerance = 1e-6;

struct EnergyReport {
  double energy = 0.0;
  double lambda_min = 0.0;
  double lower_bound = 0.0;   // n+ + n-
  double upper_bound = 0.0;   // 2 |lambda_min| n-
  double lemma_rhs = 0.0;     // n- (2 |lambda_min| - 1)
  bool holds_lower = false;
  bool holds_upper = false;
  bool holds_lemma = false;
};

/// Energy E = sum |lambda_i| checked against n+ + n- <= E <= 2|lambda_min| n- and
/// n+ <= n- (2|lambda_min| - 1), with `exact` supplying the inertia.
/// Throws std::invalid_argument on the empty graph.
EnergyReport check_energy_bounds(const Graph& g, const Inertia& exact,
                                 double tolerance = kEnergyTolerance);
EnergyReport check_energy_bounds(const Graph& g);

}  // namespace inertia
