#pragma once

#include <string>
#include <vector>

#include "inertia/bigint.hpp"
#include "inertia/graph.hpp"
#include "inertia/inertia_triple.hpp"

namespace inertia {

/// Integer polynomial, coefficients in descending degree order.
struct IntPolynomial {
  std::vector<BigInt> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  bool is_monic() const { return !coefficients.empty() && coefficients.front() == 1; }
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// det(xI - m), exact, via the division-free Berkowitz recurrence.
IntPolynomial char_poly(const IntSymMatrix& m);

/// Inertia of a real-rooted polynomial's roots: zero multiplicity from trailing
/// zeros, positive roots from Descartes' sign variations (exact when all roots
/// are real). Throws std::invalid_argument for the zero polynomial.
Inertia inertia_from_charpoly(const IntPolynomial& p);

}  // namespace inertia
