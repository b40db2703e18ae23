#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "inertia/constructions.hpp"
#include "inertia/exact_inertia.hpp"
#include "inertia/generators.hpp"
#include "inertia/reduction.hpp"

namespace {

using namespace inertia;

bool cograph_by_definition(const Graph& g) {
  if (g.order() <= 1) return true;
  for (const Graph& h : {g, complement(g)}) {
    const auto comps = connected_components(h);
    if (comps.size() > 1) {
      for (const auto& c : comps)
        if (!cograph_by_definition(induced_subgraph(g, c))) return false;
      return true;
    }
  }
  return false;
}

bool self_complementary_by_permutation(const Graph& g) {
  const Graph h = complement(g);
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.order() && ok; ++u)
      for (Vertex v = u + 1; v < g.order() && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// P4 with each vertex replaced by H, co-H, co-H, H; optionally a hub joined to the
// two outer parts. Self-complementary for any H.
Graph p4_substitution(const Graph& h, bool hub) {
  const std::size_t k = h.order();
  const Graph ch = complement(h);
  GraphBuilder b(4 * k + (hub ? 1 : 0));
  const Graph* parts[4] = {&h, &ch, &ch, &h};
  for (std::size_t p = 0; p < 4; ++p)
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v)
        if (parts[p]->adjacent(u, v)) b.add_edge(p * k + u, p * k + v);
  for (std::size_t p = 0; p + 1 < 4; ++p)
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = 0; v < k; ++v) b.add_edge(p * k + u, (p + 1) * k + v);
  if (hub)
    for (Vertex u = 0; u < k; ++u) {
      b.add_edge(4 * k, u);
      b.add_edge(4 * k, 3 * k + u);
    }
  return std::move(b).build();
}

TEST(Twins, Examples) {
  const auto c4 = twin_classes(cycle_graph(4));
  EXPECT_EQ(c4.open_classes, (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  const auto k3 = twin_classes(complete_graph(3));
  EXPECT_EQ(k3.closed_classes, (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(k3.open_classes.size(), 3U);
  const auto c5 = twin_classes(cycle_graph(5));
  EXPECT_EQ(c5.open_classes.size(), 5U);
  EXPECT_EQ(c5.closed_classes.size(), 5U);
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(cycle_graph(5)));
  EXPECT_FALSE(is_reduced(cycle_graph(4)));
  EXPECT_FALSE(is_reduced(disjoint_union(complete_graph(2), empty_graph(1))));
  EXPECT_EQ(reduce(cycle_graph(4)), complete_graph(2));
  EXPECT_EQ(reduce(path_graph(3)), complete_graph(2));
  EXPECT_EQ(reduce(cycle_graph(5)), cycle_graph(5));
  EXPECT_EQ(reduce(empty_graph(3)).order(), 0U);
}

TEST(Reduced, ReductionPreservesNonzeroInertia) {
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [](const Graph& g, std::uint64_t mask) {
      const Subgraph r = reduce_mapped(g);
      ASSERT_TRUE(is_reduced(r.graph)) << mask;
      const Inertia a = graph_inertia(g), b = graph_inertia(r.graph);
      ASSERT_EQ(a.n_plus, b.n_plus) << mask;
      ASSERT_EQ(a.n_minus, b.n_minus) << mask;
      ASSERT_EQ(induced_subgraph(g, r.origin), r.graph) << mask;
    });
}

TEST(Reduced, ReductionPreservesNonzeroInertiaOnRandomGraphs) {
  Rng rng(808);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 7 + uniform_below(rng, 6);
    // Sparse graphs so that twins and isolated vertices actually occur.
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform_below(rng, 4) == 0) b.add_edge(u, v);
    const Graph g = std::move(b).build();
    const Inertia a = graph_inertia(g), r = graph_inertia(reduce(g));
    ASSERT_EQ(a.n_plus, r.n_plus);
    ASSERT_EQ(a.n_minus, r.n_minus);
  }
}

TEST(Cograph, Examples) {
  EXPECT_FALSE(is_cograph(path_graph(4)));
  EXPECT_TRUE(is_cograph(cycle_graph(4)));
  EXPECT_TRUE(is_cograph(complete_graph(3)));
  EXPECT_TRUE(is_cograph(disjoint_union(empty_graph(1), complete_graph(2))));
  EXPECT_FALSE(is_cograph(cycle_graph(5)));
}

TEST(Cograph, MatchesRecursiveDefinition) {
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [](const Graph& g, std::uint64_t mask) {
      ASSERT_EQ(is_cograph(g), cograph_by_definition(g)) << mask;
    });
}

TEST(Cograph, ParallelScanAgreesOnLargeGraphs) {
  Graph g = complete_graph(1);
  for (int i = 0; i < 7; ++i) g = i % 2 ? join(g, g) : disjoint_union(g, g);
  ASSERT_GE(g.order(), 64U);
  EXPECT_TRUE(is_cograph(g));
  Rng rng(3);
  EXPECT_FALSE(is_cograph(random_graph(80, rng)));
}

TEST(SelfComplementary, Examples) {
  EXPECT_TRUE(is_self_complementary(cycle_graph(5)));
  EXPECT_TRUE(is_self_complementary(path_graph(4)));
  EXPECT_FALSE(is_self_complementary(complete_graph(3)));
  EXPECT_TRUE(is_self_complementary(paley_graph(13)));
  EXPECT_TRUE(is_self_complementary(paley_graph(17)));
  EXPECT_THROW(is_self_complementary(empty_graph(40)), LimitExceeded);
}

TEST(SelfComplementary, MatchesPermutationSearch) {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [](const Graph& g, std::uint64_t mask) {
      ASSERT_EQ(is_self_complementary(g), self_complementary_by_permutation(g)) << mask;
    });
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const Graph h = random_graph(2, rng);
    const Graph s8 = p4_substitution(h, false);
    const Graph s9 = p4_substitution(h, true);
    EXPECT_TRUE(self_complementary_by_permutation(s8));
    EXPECT_TRUE(is_self_complementary(s8));
    EXPECT_TRUE(is_self_complementary(s9));
    // An outer vertex has degree 2 or 3, so its twin leaves 4m != n(n-1).
    EXPECT_FALSE(is_self_complementary(add_twin(s8, 0, false)));
  }
}

}  // namespace
