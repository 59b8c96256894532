#pragma once

#include <string_view>

#include "loopswap/graph.hpp"
#include "loopswap/io.hpp"

namespace loopswap::fixtures {

// Four vertices, edges 2->4, 3->1, 4->3 of weight 1 (1-based ids). The only
// route from 2 to 1 is 2 -> 4 -> 3 -> 1, which the pivot-innermost order
// never assembles.
inline constexpr std::string_view kSwapExample = "4 3\n2 4 1\n3 1 1\n4 3 1\n";

inline constexpr std::string_view kSwapTrue =
    "4\n"
    "0 inf inf inf\n"
    "3 0 2 1\n"
    "1 inf 0 inf\n"
    "2 inf 1 0\n";

inline constexpr std::string_view kSwapInnermost =
    "4\n"
    "0 inf inf inf\n"
    "inf 0 2 1\n"
    "1 inf 0 inf\n"
    "2 inf 1 0\n";

inline Graph swap_example() { return parse_graph(kSwapExample, GraphFormat::kEdgeList); }
inline DistMatrix matrix(std::string_view text) { return parse_matrix(text); }

}  // namespace loopswap::fixtures
