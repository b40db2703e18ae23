#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "inertia/charpoly.hpp"
#include "inertia/constructions.hpp"
#include "inertia/generators.hpp"

namespace {

using namespace inertia;

using Poly = std::vector<BigInt>;  // ascending powers

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// det(xI - A) by the Leibniz expansion.
IntPolynomial leibniz_charpoly(const IntSymMatrix& a) {
  const std::size_t n = a.dimension();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(n + 1, 0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly term{sign};
    for (std::size_t i = 0; i < n; ++i) {
      const Poly entry = perm[i] == i ? Poly{-static_cast<long>(a(i, i)), 1}
                                      : Poly{-static_cast<long>(a(i, perm[i]))};
      term = multiply(term, entry);
    }
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  IntPolynomial out;
  out.coefficients.assign(total.rbegin(), total.rend());
  return out;
}

IntPolynomial poly(std::initializer_list<long> c) {
  IntPolynomial p;
  for (long v : c) p.coefficients.emplace_back(v);
  return p;
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(adjacency_matrix(complete_graph(2))), poly({1, 0, -1}));
  EXPECT_EQ(char_poly(adjacency_matrix(complete_graph(3))), poly({1, 0, -3, -2}));
  EXPECT_EQ(char_poly(adjacency_matrix(cycle_graph(5))), poly({1, 0, -5, 0, 5, -2}));
  EXPECT_EQ(char_poly(adjacency_matrix(path_graph(4))), poly({1, 0, -3, 0, 1}));
  EXPECT_EQ(char_poly(IntSymMatrix(0)), poly({1}));
}

TEST(CharPoly, MatchesLeibnizOracle) {
  EXPECT_EQ(leibniz_charpoly(adjacency_matrix(cycle_graph(5))), poly({1, 0, -5, 0, 5, -2}));
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + uniform_below(rng, 6);
    IntSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        m(i, j) = m(j, i) = static_cast<std::int64_t>(uniform_below(rng, 7)) - 3;
    const IntPolynomial p = char_poly(m);
    ASSERT_EQ(p, leibniz_charpoly(m));
    ASSERT_TRUE(p.is_monic());
    ASSERT_EQ(p.degree(), n);
  }
}

TEST(CharPoly, InertiaFromDescartes) {
  EXPECT_EQ(inertia_from_charpoly(poly({1, 0, -1})), (Inertia{1, 0, 1}));
  EXPECT_EQ(inertia_from_charpoly(poly({1, 0, -3, -2})), (Inertia{1, 0, 2}));
  EXPECT_EQ(inertia_from_charpoly(poly({1, 0, -2, 0})), (Inertia{1, 1, 1}));
  EXPECT_EQ(inertia_from_charpoly(poly({1, 0, 0})), (Inertia{0, 2, 0}));
  EXPECT_THROW(inertia_from_charpoly(IntPolynomial{}), std::invalid_argument);
}

TEST(CharPoly, ToString) {
  EXPECT_EQ(poly({1, 0, -3, -2}).to_string(), "[1,0,-3,-2]");
}

}  // namespace
