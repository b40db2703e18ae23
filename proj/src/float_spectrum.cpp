#include "inertia/float_spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "inertia/exact_inertia.hpp"

namespace inertia {

FloatSpectrum float_spectrum(const IntSymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dimension());
  FloatSpectrum out;
  if (n == 0) return out;

  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = static_cast<double>(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw EigenSolverError("symmetric eigensolver did not converge (order " +
                           std::to_string(n) + ")");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  double residual = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::VectorXd v = vectors.col(k);
    const double r = (a * v - values(k) * v).norm() / std::max(v.norm(), 1e-300);
    residual = std::max(residual, r);
  }
  const double floor = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                       std::max(a.norm(), 1.0);
  out.residual_bound = std::max(residual, floor);
  out.eigenvalues.assign(values.data(), values.data() + n);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

Inertia approximate_inertia(const FloatSpectrum& spectrum, double tolerance) {
  Inertia out;
  for (double x : spectrum.eigenvalues) {
    if (x > tolerance)
      ++out.n_plus;
    else if (x < -tolerance)
      ++out.n_minus;
    else
      ++out.n_zero;
  }
  return out;
}

EnergyReport check_energy_bounds(const Graph& g, const Inertia& exact, double tolerance) {
  if (g.order() == 0) throw std::invalid_argument("energy bounds need a nonempty graph");
  const FloatSpectrum spectrum = float_spectrum(adjacency_matrix(g));
  EnergyReport r;
  for (double x : spectrum.eigenvalues) r.energy += std::abs(x);
  r.lambda_min = spectrum.eigenvalues.back();
  const double abs_min = std::abs(r.lambda_min);
  const auto plus = static_cast<double>(exact.n_plus);
  const auto minus = static_cast<double>(exact.n_minus);
  r.lower_bound = plus + minus;
  r.upper_bound = 2.0 * abs_min * minus;
  r.lemma_rhs = minus * (2.0 * abs_min - 1.0);
  r.holds_lower = r.energy >= r.lower_bound - tolerance;
  r.holds_upper = r.energy <= r.upper_bound + tolerance;
  r.holds_lemma = plus <= r.lemma_rhs + tolerance;
  return r;
}

EnergyReport check_energy_bounds(const Graph& g) {
  return check_energy_bounds(g, graph_inertia(g));
}

}  // namespace inertia
