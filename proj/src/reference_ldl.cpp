#include "inertia/kernels.hpp"

#include <utility>

namespace inertia::kernels {

Inertia reference_inertia(const SquareMatrix<Rational>& input) {
  SquareMatrix<Rational> s = input;
  const std::size_t n = s.dimension();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia out;
  while (!active.empty()) {
    std::size_t k = active.size();
    for (std::size_t t = 0; t < active.size(); ++t)
      if (s(active[t], active[t]) != 0) {
        k = t;
        break;
      }

    if (k != active.size()) {
      const std::size_t p = active[k];
      const Rational pivot = s(p, p);
      if (sgn(pivot) > 0)
        ++out.n_plus;
      else
        ++out.n_minus;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(k));
      for (std::size_t i : active) {
        if (s(i, p) == 0) continue;
        const Rational factor = s(i, p) / pivot;
        for (std::size_t j : active) s(i, j) -= factor * s(p, j);
      }
      continue;
    }

    std::size_t a = 0, b = 0;
    bool found = false;
    for (std::size_t x = 0; x < active.size() && !found; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (s(active[x], active[y]) != 0) {
          a = active[x];
          b = active[y];
          found = true;
          break;
        }
    if (!found) {
      out.n_zero += active.size();
      break;
    }
    // E = [[0,e],[e,0]], E^{-1} = [[0,1/e],[1/e,0]].
    const Rational inv = 1 / s(a, b);
    ++out.n_plus;
    ++out.n_minus;
    std::erase(active, a);
    std::erase(active, b);
    std::vector<Rational> ra(active.size()), rb(active.size());
    for (std::size_t t = 0; t < active.size(); ++t) {
      ra[t] = s(active[t], a);
      rb[t] = s(active[t], b);
    }
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y)
        s(active[x], active[y]) -= (ra[x] * rb[y] + rb[x] * ra[y]) * inv;
  }
  return out;
}

}  // namespace inertia::kernels
