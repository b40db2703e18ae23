#include "inertia/exact_inertia.hpp"

#include <stdexcept>

#include "inertia/kernels.hpp"

namespace inertia {

namespace {

template <typename M>
void require_symmetric(const M& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

BigIntSymMatrix widen(const IntSymMatrix& m) {
  BigIntSymMatrix out(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j)
      out(i, j) = static_cast<long>(m(i, j));
  return out;
}

}  // namespace

Inertia inertia(const IntSymMatrix& m) {
  require_symmetric(m);
  if (auto fast = kernels::congruence_inertia_i64(m)) return *fast;
  return kernels::congruence_inertia(widen(m));
}

Inertia inertia(const BigIntSymMatrix& m) {
  require_symmetric(m);
  return kernels::congruence_inertia(m);
}

Inertia inertia(const RationalSymMatrix& m) {
  require_symmetric(m);
  // Scaling by a positive common denominator preserves inertia.
  BigInt scale = 1;
  for (const auto& x : m.data()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  BigIntSymMatrix scaled(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j)
      scaled(i, j) = m(i, j).get_num() * (scale / m(i, j).get_den());
  return kernels::congruence_inertia(scaled);
}

Inertia shifted_inertia(const IntSymMatrix& m, const Rational& c) {
  require_symmetric(m);
  const BigInt& p = c.get_num();
  const BigInt& q = c.get_den();  // positive after canonicalisation
  if (q == 1 && p.fits_slong_p()) {
    IntSymMatrix shifted = m;
    bool fits = true;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      const long shift = p.get_si();
      if (__builtin_sub_overflow(m(i, i), shift, &shifted(i, i))) fits = false;
    }
    if (fits) return inertia(shifted);
  }
  BigIntSymMatrix scaled(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      scaled(i, j) = q * static_cast<long>(m(i, j));
      if (i == j) scaled(i, j) -= p;
    }
  return kernels::congruence_inertia(scaled);
}

std::size_t count_eigenvalues_in_interval(const IntSymMatrix& m, const Rational& a,
                                          const Rational& b, bool include_a, bool include_b) {
  if (a > b) throw std::invalid_argument("interval lower end exceeds upper end");
  const Inertia at_b = shifted_inertia(m, b);
  if (a == b) return include_a && include_b ? at_b.n_zero : 0;
  const Inertia at_a = shifted_inertia(m, a);
  const std::size_t upper = at_b.n_minus + (include_b ? at_b.n_zero : 0);
  const std::size_t lower = at_a.n_minus + (include_a ? 0 : at_a.n_zero);
  return upper - lower;
}

Inertia graph_inertia(const Graph& g) { return inertia(adjacency_matrix(g)); }

}  // namespace inertia
