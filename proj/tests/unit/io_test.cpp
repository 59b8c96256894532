#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "loopswap/errors.hpp"
#include "loopswap/io.hpp"

namespace loopswap {
namespace {

std::size_t error_line(std::string_view text, GraphFormat format = GraphFormat::kEdgeList) {
  try {
    parse_graph(text, format);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(Io, EdgeListUsesOneBasedIds) {
  const Graph g = fixtures::swap_example();
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge_weight(1, 3), Weight(1));
}

TEST(Io, MatrixFormatReadsFiniteCellsAsEdges) {
  const Graph g = parse_graph("3\n0 4 inf\ninf 0 -1\n2 inf 0\n", GraphFormat::kMatrix);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge_weight(1, 2), Weight(-1));
}

TEST(Io, ToleratesBlankPaddingAndCarriageReturns) {
  const Graph g = parse_graph("2 1\r\n  1\t2  5 \r\n\n", GraphFormat::kEdgeList);
  EXPECT_EQ(g.edge_weight(0, 1), Weight(5));
}

TEST(Io, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("x 1\n1 2 3\n"), 1u);
  EXPECT_EQ(error_line("2 2\n1 2 3\n1 3 1\n"), 3u);
  EXPECT_EQ(error_line("2 1\n1 2\n"), 2u);
  EXPECT_EQ(error_line("2 2\n1 2 3\n"), 3u);
  EXPECT_EQ(error_line("2 1\n1 2 3\n9\n"), 3u);
  EXPECT_EQ(error_line("2 1\n1 2 inf\n"), 2u);
  EXPECT_EQ(error_line("2\n0 1\n1\n", GraphFormat::kMatrix), 3u);
}

TEST(Io, DeclaredBoundIsEnforced) {
  EXPECT_NO_THROW(parse_graph("2 1\n1 2 -5\n", GraphFormat::kEdgeList, {5}));
  EXPECT_THROW(parse_graph("2 1\n1 2 -6\n", GraphFormat::kEdgeList, {5}), ParseError);
}

TEST(Io, NegativeSelfLoopIsReportedAsNegativeCycle) {
  EXPECT_THROW(parse_graph("2 1\n2 2 -1\n", GraphFormat::kEdgeList), NegativeCycleError);
  EXPECT_THROW(parse_graph("1\n-1\n", GraphFormat::kMatrix), NegativeCycleError);
}

TEST(Io, MatrixRoundTrip) {
  const DistMatrix m = fixtures::matrix(fixtures::kSwapTrue);
  std::ostringstream os;
  write_matrix(os, m);
  EXPECT_EQ(os.str(), fixtures::kSwapTrue);
  EXPECT_EQ(parse_matrix(os.str()), m);
}

TEST(Io, EdgeListRoundTrip) {
  const Graph g = parse_graph("3 3\n1 2 -4\n2 3 7\n3 1 0\n", GraphFormat::kEdgeList);
  std::ostringstream os;
  write_edge_list(os, g);
  EXPECT_EQ(parse_graph(os.str(), GraphFormat::kEdgeList), g);
}

TEST(Io, FormatNames) {
  EXPECT_EQ(parse_format_name("edgelist"), GraphFormat::kEdgeList);
  EXPECT_EQ(parse_format_name("matrix"), GraphFormat::kMatrix);
  EXPECT_FALSE(parse_format_name("csv").has_value());
}

}  // namespace
}  // namespace loopswap
