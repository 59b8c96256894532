#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "loopswap/graph.hpp"

namespace loopswap {

// Edge list:  "n m" then m lines "u v w" (1-based, signed decimal).
// Matrix:     "n" then n lines of n tokens, each a signed decimal or "inf".
// ASCII, LF-terminated, whitespace-separated tokens.
enum class GraphFormat { kEdgeList, kMatrix };

std::optional<GraphFormat> parse_format_name(std::string_view name);

struct ParseOptions {
  // Declared weight bound M. When absent it is inferred from the input.
  std::optional<std::int64_t> weight_bound;
};

// Throws ParseError (with line number), InvalidGraph or NegativeCycleError.
Graph parse_graph(std::istream& in, GraphFormat format, const ParseOptions& options = {});
Graph parse_graph(std::string_view text, GraphFormat format, const ParseOptions& options = {});

// Reads a matrix-format file verbatim, without graph normalization.
DistMatrix parse_matrix(std::istream& in);
DistMatrix parse_matrix(std::string_view text);

void write_matrix(std::ostream& out, const DistMatrix& m);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace loopswap
