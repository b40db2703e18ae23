#include <gtest/gtest.h>

#include "inertia/constructions.hpp"
#include "inertia/generators.hpp"
#include "inertia/graph6.hpp"

namespace {

using namespace inertia;

const std::vector<Edge> kPetersenEdges = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                          {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};

TEST(Graph6, FixedVectors) {
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(parse_graph6("?").order(), 0U);
  EXPECT_EQ(write_graph6(empty_graph(0)), "?");
  EXPECT_EQ(write_graph6(empty_graph(1)), "@");
  EXPECT_EQ(write_graph6(empty_graph(2)), "A?");
  EXPECT_EQ(write_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), Graph::from_edges(10, kPetersenEdges));
}

TEST(Graph6, HeaderAndLineEndingsTolerated) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\r\n"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bw\n"), complete_graph(3));
}

TEST(Graph6, LongSizeField) {
  const Graph p = path_graph(70);
  const std::string text = write_graph6(p);
  EXPECT_EQ(text.substr(0, 12), "~?@EhCGGC@?G");
  EXPECT_EQ(text.size(), 407U);
  EXPECT_EQ(parse_graph6(text), p);
}

TEST(Graph6, EightByteSizeField) {
  // 258048 = 63 * 4096, which needs the 8-byte form.
  EXPECT_THROW(parse_graph6("~~???~??", 10), ParseError);
}

TEST(Graph6, Errors) {
  try {
    parse_graph6("B w");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
  EXPECT_THROW(parse_graph6("Bww"), ParseError);   // too long
  EXPECT_THROW(parse_graph6("C"), ParseError);     // too short
  EXPECT_THROW(parse_graph6("Bx"), ParseError);    // nonzero padding bit
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("~??"), ParseError);   // truncated size field
  EXPECT_THROW(parse_graph6("Dhc", 4), ParseError);
}

TEST(Sparse6, FixedVectors) {
  EXPECT_EQ(parse_sparse6(":Cdv"), path_graph(4));
  EXPECT_EQ(parse_sparse6(":DaY_~"), cycle_graph(5));
  EXPECT_EQ(parse_sparse6(":I`ES@obGkqegW~"), Graph::from_edges(10, kPetersenEdges));
  EXPECT_EQ(parse_sparse6(
                ":~?@E_GEA_wQD`g]GaWiJbGuMbxAPchMSdXYVeHeYexq\\fh}_gYIbhIUehyahiimkjYynkJEqkzQtlj]"
                "wmZiznJu}n{B@okNC"),
            path_graph(70));
  EXPECT_EQ(parse_graph_line(":Cdv"), path_graph(4));
  EXPECT_EQ(parse_graph_line(">>sparse6<<:Cdv\n"), path_graph(4));
}

TEST(Sparse6, Errors) {
  EXPECT_THROW(parse_sparse6("Cdv"), ParseError);
  EXPECT_THROW(parse_sparse6(":C d"), ParseError);
}

TEST(Graph6, RoundTripAllSmallGraphs) {
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_labeled_graph(n, [](const Graph& g, std::uint64_t) {
      ASSERT_EQ(parse_graph6(write_graph6(g)), g);
    });
}

TEST(Graph6, RoundTripRandomGraphs) {
  Rng rng(11);
  for (std::size_t n : {7U, 31U, 62U, 63U, 64U, 100U, 257U}) {
    const Graph g = random_graph(n, rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g) << n;
  }
}

}  // namespace
