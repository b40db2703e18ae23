#include "inertia/kernels.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

namespace inertia::kernels {

// Both kernels keep M = D * S, where S is the current Schur complement and D the
// determinant of the principal block eliminated so far. Every entry of M is a
// minor of the input, so the divisions below are exact.
//
//   1x1 pivot p = M[k][k]:   M'[i][j] = (p M[i][j] - M[i][k] M[k][j]) / D,   D' = p
//   2x2 pivot [[0,e],[e,0]]: M'[i][j] = (-e^2 M[i][j] + e (M[i][a] M[b][j] + M[i][b] M[a][j])) / D^2,
//                            D' = -e^2 / D
//
// sign(S[k][k]) = sign(M[k][k]) * sign(D); a 2x2 pivot has negative determinant
// and contributes one eigenvalue of each sign. Only the upper triangle is kept.

namespace {

template <typename T>
class UpperStore {
 public:
  explicit UpperStore(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  T& at(std::size_t i, std::size_t j) { return i <= j ? a_[i * n_ + j] : a_[j * n_ + i]; }

  // Symmetric permutation exchanging indices p < q.
  void swap_index(std::size_t p, std::size_t q) {
    if (p == q) return;
    if (p > q) std::swap(p, q);
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == p || k == q) continue;
      std::swap(at(p, k), at(q, k));
    }
    std::swap(at(p, p), at(q, q));
  }

 private:
  std::size_t n_;
  std::vector<T> a_;
};

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

bool in_range(__int128 v) { return v > -kLimit && v < kLimit; }

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }
int sgn(const BigInt& v) { return sgn(static_cast<std::int64_t>(mpz_sgn(v.get_mpz_t()))); }

void count_sign(Inertia& out, int s) {
  if (s > 0)
    ++out.n_plus;
  else
    ++out.n_minus;
}

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

std::optional<Inertia> congruence_inertia_i64(const IntSymMatrix& m,
                                              const KernelOptions& options) {
  const std::size_t n = m.dimension();
  UpperStore<std::int64_t> w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!in_range(m(i, j))) return std::nullopt;
      w.at(i, j) = m(i, j);
    }

  Inertia out;
  std::int64_t d = 1;
  std::size_t s = 0;
  while (s < n) {
    std::size_t best = n;
    for (std::size_t k = s; k < n; ++k)
      if (w.at(k, k) != 0 && (best == n || magnitude(w.at(k, k)) > magnitude(w.at(best, best))))
        best = k;

    std::atomic<bool> overflow{false};
    if (best != n) {
      w.swap_index(s, best);
      const std::int64_t p = w.at(s, s);
      count_sign(out, sgn(p) * sgn(d));
      const std::size_t lo = s + 1;
      const auto rows = static_cast<std::ptrdiff_t>(n - lo);
#pragma omp parallel for schedule(dynamic, 8) if (n - lo >= options.parallel_threshold)
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const std::size_t i = lo + static_cast<std::size_t>(r);
        const __int128 pi = w.at(s, i);
        for (std::size_t j = i; j < n; ++j) {
          __int128 v = static_cast<__int128>(p) * w.at(i, j) - pi * w.at(s, j);
          v /= d;
          if (!in_range(v)) {
            overflow.store(true, std::memory_order_relaxed);
            continue;
          }
          w.at(i, j) = static_cast<std::int64_t>(v);
        }
      }
      if (overflow.load()) return std::nullopt;
      d = p;
      s += 1;
      continue;
    }

    std::size_t pa = n, pb = n;
    for (std::size_t a = s; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (w.at(a, b) != 0 && (pa == n || magnitude(w.at(a, b)) > magnitude(w.at(pa, pb)))) {
          pa = a;
          pb = b;
        }
    if (pa == n) {
      out.n_zero += n - s;
      break;
    }
    w.swap_index(s, pa);
    w.swap_index(s + 1, pb);
    const __int128 e = w.at(s, s + 1);
    ++out.n_plus;
    ++out.n_minus;
    const __int128 e2 = e * e;
    const __int128 d2 = static_cast<__int128>(d) * d;
    const std::size_t lo = s + 2;
    const auto rows = static_cast<std::ptrdiff_t>(n - lo);
#pragma omp parallel for schedule(dynamic, 8) if (n - lo >= options.parallel_threshold)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      const std::size_t i = lo + static_cast<std::size_t>(r);
      const __int128 ia = w.at(s, i), ib = w.at(s + 1, i);
      for (std::size_t j = i; j < n; ++j) {
        __int128 cross1, cross2, cross, lhs, rhs, num;
        bool bad = __builtin_mul_overflow(ia, static_cast<__int128>(w.at(s + 1, j)), &cross1);
        bad |= __builtin_mul_overflow(ib, static_cast<__int128>(w.at(s, j)), &cross2);
        bad |= __builtin_add_overflow(cross1, cross2, &cross);
        bad |= __builtin_mul_overflow(e, cross, &rhs);
        bad |= __builtin_mul_overflow(e2, static_cast<__int128>(w.at(i, j)), &lhs);
        bad |= __builtin_sub_overflow(rhs, lhs, &num);
        if (bad) {
          overflow.store(true, std::memory_order_relaxed);
          continue;
        }
        num /= d2;
        if (!in_range(num)) {
          overflow.store(true, std::memory_order_relaxed);
          continue;
        }
        w.at(i, j) = static_cast<std::int64_t>(num);
      }
    }
    if (overflow.load()) return std::nullopt;
    const __int128 next = -e2 / d;
    if (!in_range(next)) return std::nullopt;
    d = static_cast<std::int64_t>(next);
    s += 2;
  }
  return out;
}

Inertia congruence_inertia(const SquareMatrix<BigInt>& m, const KernelOptions& options) {
  const std::size_t n = m.dimension();
  UpperStore<BigInt> w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) w.at(i, j) = m(i, j);

  Inertia out;
  BigInt d = 1;
  std::size_t s = 0;
  while (s < n) {
    std::size_t best = n;
    for (std::size_t k = s; k < n; ++k)
      if (sgn(w.at(k, k)) != 0 &&
          (best == n || mpz_cmpabs(w.at(k, k).get_mpz_t(), w.at(best, best).get_mpz_t()) > 0))
        best = k;

    if (best != n) {
      w.swap_index(s, best);
      const BigInt p = w.at(s, s);
      count_sign(out, sgn(p) * sgn(d));
      const std::size_t lo = s + 1;
      const auto rows = static_cast<std::ptrdiff_t>(n - lo);
#pragma omp parallel for schedule(dynamic, 4) if (n - lo >= options.parallel_threshold)
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const std::size_t i = lo + static_cast<std::size_t>(r);
        BigInt t;
        const mpz_srcptr pi = w.at(s, i).get_mpz_t();
        for (std::size_t j = i; j < n; ++j) {
          mpz_ptr target = w.at(i, j).get_mpz_t();
          mpz_mul(t.get_mpz_t(), p.get_mpz_t(), target);
          mpz_submul(t.get_mpz_t(), pi, w.at(s, j).get_mpz_t());
          mpz_divexact(target, t.get_mpz_t(), d.get_mpz_t());
        }
      }
      d = p;
      s += 1;
      continue;
    }

    std::size_t pa = n, pb = n;
    for (std::size_t a = s; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (sgn(w.at(a, b)) != 0 && (pa == n || mpz_cmpabs(w.at(a, b).get_mpz_t(), w.at(pa, pb).get_mpz_t()) > 0)) {
          pa = a;
          pb = b;
        }
    if (pa == n) {
      out.n_zero += n - s;
      break;
    }
    w.swap_index(s, pa);
    w.swap_index(s + 1, pb);
    const BigInt e = w.at(s, s + 1);
    ++out.n_plus;
    ++out.n_minus;
    const BigInt e2 = e * e;
    const BigInt d2 = d * d;
    const std::size_t lo = s + 2;
    const auto rows = static_cast<std::ptrdiff_t>(n - lo);
#pragma omp parallel for schedule(dynamic, 4) if (n - lo >= options.parallel_threshold)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      const std::size_t i = lo + static_cast<std::size_t>(r);
      BigInt cross, num;
      const mpz_srcptr ia = w.at(s, i).get_mpz_t();
      const mpz_srcptr ib = w.at(s + 1, i).get_mpz_t();
      for (std::size_t j = i; j < n; ++j) {
        mpz_ptr target = w.at(i, j).get_mpz_t();
        mpz_mul(cross.get_mpz_t(), ia, w.at(s + 1, j).get_mpz_t());
        mpz_addmul(cross.get_mpz_t(), ib, w.at(s, j).get_mpz_t());
        mpz_mul(num.get_mpz_t(), e.get_mpz_t(), cross.get_mpz_t());
        mpz_submul(num.get_mpz_t(), e2.get_mpz_t(), target);
        mpz_divexact(target, num.get_mpz_t(), d2.get_mpz_t());
      }
    }
    BigInt next = -e2;
    mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), d.get_mpz_t());
    d = std::move(next);
    s += 2;
  }
  return out;
}

}  // namespace inertia::kernels
