#include "inertia/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace inertia {

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) os << ',';
    os << coefficients[i].get_str();
  }
  os << ']';
  return os.str();
}

IntPolynomial char_poly(const IntSymMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return {{BigInt(1)}};

  auto entry = [&](std::size_t i, std::size_t j) { return BigInt(static_cast<long>(m(i, j))); };

  // coeffs holds the characteristic polynomial of the leading r x r block.
  std::vector<BigInt> coeffs{BigInt(1), -entry(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
    std::vector<BigInt> column(r + 2);
    column[0] = 1;
    column[1] = -entry(r, r);
    std::vector<BigInt> v(r);  // A_r^k C
    for (std::size_t i = 0; i < r; ++i) v[i] = entry(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += entry(r, i) * v[i];
      column[k] = -dot;
      if (k == r + 1) break;
      std::vector<BigInt> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (m(i, j) != 0) acc += entry(i, j) * v[j];
        next[i] = std::move(acc);
      }
      v = std::move(next);
    }
    std::vector<BigInt> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += column[i - j] * coeffs[j];
      updated[i] = std::move(acc);
    }
    coeffs = std::move(updated);
  }
  return {std::move(coeffs)};
}

Inertia inertia_from_charpoly(const IntPolynomial& p) {
  const auto& c = p.coefficients;
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first == c.size()) throw std::invalid_argument("zero polynomial has no inertia");

  const std::size_t degree = c.size() - 1 - first;
  std::size_t zeros = 0;
  while (c[c.size() - 1 - zeros] == 0) ++zeros;

  std::size_t variations = 0;
  int last = 0;
  for (std::size_t i = first; i < c.size(); ++i) {
    const int s = sgn(c[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return {variations, zeros, degree - variations - zeros};
}

}  // namespace inertia
