#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

namespace inertia {

/// Counts of positive, zero and negative eigenvalues.
struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  std::size_t dimension() const { return n_plus + n_zero + n_minus; }
  std::int64_t signature() const {
    return static_cast<std::int64_t>(n_plus) - static_cast<std::int64_t>(n_minus);
  }
  std::size_t rank() const { return n_plus + n_minus; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline Inertia operator+(const Inertia& a, const Inertia& b) {
  return {a.n_plus + b.n_plus, a.n_zero + b.n_zero, a.n_minus + b.n_minus};
}

inline std::ostream& operator<<(std::ostream& os, const Inertia& i) {
  return os << '(' << i.n_plus << ',' << i.n_zero << ',' << i.n_minus << ')';
}

}  // namespace inertia
