#include <gtest/gtest.h>

#include "inertia/constructions.hpp"
#include "inertia/exact_inertia.hpp"
#include "inertia/generators.hpp"
#include "inertia/reduction.hpp"

namespace {

using namespace inertia;

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() == 0 && h.order() == 0) return true;
  return !find_isomorphism(g, h).empty();
}

TEST(LineGraph, Examples) {
  EXPECT_TRUE(isomorphic(line_graph(cycle_graph(5)), cycle_graph(5)));
  EXPECT_EQ(line_graph(star_graph(3)), complete_graph(3));
  EXPECT_EQ(line_graph(path_graph(4)), path_graph(3));
  const Graph t4 = line_graph(complete_graph(4));
  EXPECT_EQ(t4.order(), 6U);
  EXPECT_EQ(t4, triangular_graph(4));
  // L(K4) is the octahedron K(2,2,2): spectrum {4, 0^3, -2^2}.
  EXPECT_TRUE(isomorphic(t4, complete_multipartite(std::vector<std::size_t>{2, 2, 2})));
  EXPECT_EQ(graph_inertia(t4), (Inertia{1, 3, 2}));
}

TEST(LineGraph, VerticesFollowLexicographicEdges) {
  // Edges of P3 + pendant: (0,1),(1,2),(1,3); all pairwise share vertex 1.
  const Graph g = Graph::from_edges(4, {{1, 3}, {0, 1}, {1, 2}});
  EXPECT_EQ(line_graph(g), complete_graph(3));
  const Graph h = Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 2}});
  EXPECT_EQ(line_graph(h), path_graph(3));
}

TEST(Join, Examples) {
  EXPECT_EQ(join(empty_graph(1), empty_graph(1)), complete_graph(2));
  EXPECT_TRUE(isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
  const Graph u = disjoint_union(cycle_graph(5), cycle_graph(5));
  EXPECT_EQ(u.order(), 10U);
  EXPECT_EQ(graph_inertia(u), (Inertia{6, 0, 4}));
}

TEST(Tensor, Examples) {
  const Graph k = tensor_product(complete_graph(2), complete_graph(2));
  EXPECT_TRUE(isomorphic(k, disjoint_union(complete_graph(2), complete_graph(2))));
  EXPECT_EQ(graph_inertia(k), (Inertia{2, 0, 2}));
  EXPECT_EQ(graph_inertia(tensor_product(cycle_graph(5), cycle_graph(5))), (Inertia{13, 0, 12}));
  EXPECT_EQ(tensor_product(cycle_graph(5), empty_graph(1)), empty_graph(5));
}

TEST(KotlovLovasz, Examples) {
  const Graph d = kotlov_lovasz_double(complete_graph(2));
  EXPECT_EQ(d.order(), 6U);
  EXPECT_EQ(graph_inertia(d), (Inertia{2, 2, 2}));
  const Graph dd = kotlov_lovasz_double(d);
  EXPECT_EQ(dd.order(), 14U);
  EXPECT_EQ(graph_inertia(dd).n_plus, 3U);
  EXPECT_EQ(graph_inertia(dd).n_minus, 3U);
  const Graph k1 = kotlov_lovasz_double(empty_graph(1));
  EXPECT_EQ(k1.order(), 4U);
  EXPECT_EQ(graph_inertia(k1).n_plus, 1U);
  EXPECT_EQ(graph_inertia(k1).n_minus, 1U);
}

TEST(KotlovLovasz, BlockStructure) {
  const Graph g = cycle_graph(5);
  const Graph d = kotlov_lovasz_double(g);
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(d.adjacent(u, n + v), g.adjacent(u, v));
      if (u != v) {
        EXPECT_EQ(d.adjacent(u, v), g.adjacent(u, v));
        EXPECT_EQ(d.adjacent(n + u, n + v), g.adjacent(u, v));
      }
    }
  const Vertex x = 2 * n, y = 2 * n + 1;
  for (Vertex v = 0; v < n; ++v) {
    EXPECT_FALSE(d.adjacent(x, v));
    EXPECT_TRUE(d.adjacent(x, n + v));
    EXPECT_FALSE(d.adjacent(y, v));
    EXPECT_FALSE(d.adjacent(y, n + v));
  }
  EXPECT_TRUE(d.adjacent(x, y));
}

TEST(KotlovLovasz, RaisesBothCountsOnRandomGraphs) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(1 + uniform_below(rng, 9), rng);
    const Inertia a = graph_inertia(g);
    const Inertia b = graph_inertia(kotlov_lovasz_double(g));
    ASSERT_EQ(b.n_plus, a.n_plus + 1);
    ASSERT_EQ(b.n_minus, a.n_minus + 1);
  }
}

TEST(KotlovLovasz, RaisesBothCountsOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [](const Graph& g, std::uint64_t mask) {
      const Inertia a = graph_inertia(g);
      const Inertia b = graph_inertia(kotlov_lovasz_double(g));
      ASSERT_EQ(b.n_plus, a.n_plus + 1) << mask;
      ASSERT_EQ(b.n_minus, a.n_minus + 1) << mask;
    });
}

TEST(Twin, Examples) {
  EXPECT_TRUE(isomorphic(add_twin(complete_graph(2), 0, false), path_graph(3)));
  EXPECT_EQ(add_twin(complete_graph(2), 0, true), complete_graph(3));
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_EQ(graph_inertia(add_twin(cycle_graph(5), v, false)), (Inertia{3, 1, 2}));
}

TEST(Families, Examples) {
  EXPECT_EQ(graph_inertia(triangular_graph(6)), (Inertia{6, 0, 9}));
  EXPECT_EQ(triangular_graph(6).order(), 15U);
  EXPECT_TRUE(isomorphic(paley_graph(5), cycle_graph(5)));
  EXPECT_THROW(paley_graph(9), std::invalid_argument);
  EXPECT_THROW(paley_graph(7), std::invalid_argument);
  EXPECT_EQ(graph_inertia(paley_graph(13)), (Inertia{7, 0, 6}));
  EXPECT_EQ(graph_inertia(h1_graph()), (Inertia{6, 0, 3}));
  EXPECT_EQ(graph_inertia(h2_graph()), (Inertia{6, 0, 3}));
  EXPECT_EQ(h1_graph().size(), 15U);
  EXPECT_EQ(h2_graph().size(), 16U);
  const Graph p = petersen_graph();
  EXPECT_EQ(p.order(), 10U);
  EXPECT_EQ(p.size(), 15U);
  EXPECT_EQ(graph_inertia(p), (Inertia{6, 0, 4}));
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6U);
  EXPECT_EQ(star_graph(4), complete_bipartite(1, 4));
}

TEST(Families, ByName) {
  const std::size_t five[] = {5};
  EXPECT_EQ(family("cycle", five), cycle_graph(5));
  EXPECT_EQ(family("H1", {}), h1_graph());
  const std::size_t parts[] = {1, 2, 3};
  EXPECT_EQ(family("complete_multipartite", parts).size(), 11U);
  EXPECT_THROW(family("nonsense", five), std::invalid_argument);
  EXPECT_THROW(family("cycle", {}), std::invalid_argument);
  EXPECT_FALSE(family_names().empty());
}

TEST(Constructions, EdgeCountIsHalfDegreeSum) {
  Rng rng(4);
  const Graph a = random_graph(6, rng), b = random_graph(5, rng);
  for (const Graph& g : {line_graph(a), join(a, b), disjoint_union(a, b), tensor_product(a, b),
                         kotlov_lovasz_double(a), add_twin(a, 2, true)}) {
    std::size_t sum = 0;
    for (auto d : g.degrees()) sum += d;
    EXPECT_EQ(2 * g.size(), sum);
  }
}

TEST(Constructions, OrderOverflow) {
  EXPECT_THROW(complete_graph(kDefaultMaxOrder + 1), OrderOverflow);
}

}  // namespace
