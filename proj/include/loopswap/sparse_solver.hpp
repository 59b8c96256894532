#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "loopswap/graph.hpp"

namespace loopswap {

enum class SsspEngine {
  kAuto,         // Dijkstra if every edge is non-negative, Bellman-Ford otherwise
  kDijkstra,     // binary heap; rejects graphs with negative edges
  kBellmanFord,  // with early exit on a pass without change
};

struct SsspResult {
  Vertex source = 0;
  std::vector<Weight> dist;
};

// Exact single-source distances. Precondition: no negative cycles. Bellman-Ford
// still checks for improvement on pass n and throws ContractViolation if found.
SsspResult sssp(const Graph& g, Vertex source, SsspEngine engine = SsspEngine::kAuto);

// Keeps exactly the edges (u, v) with u <= i or v <= i.
Graph restricted_graph(const Graph& g, Vertex i);

struct SparseOptions {
  SsspEngine engine = SsspEngine::kAuto;
  // Row blocks are independent; 0 means hardware concurrency.
  unsigned threads = 1;
};

struct SparseStats {
  std::atomic<std::size_t> sssp_calls{0};
};

// Row segment (M[i][i], M[i][i+1], ..., M[i][n-1]) of the pivot-innermost
// result for fixed source i:
//   1. distances from i in restricted_graph(g, i)   (no two consecutive
//      vertices above i, so every path is proper up to its last edge);
//   2. one extra relaxation over every edge of g    (the exempt last edge);
//   3. ascending DP over j appending increasing edges k -> j with i <= k < j.
std::vector<Weight> solve_row_block(const Graph& g, Vertex i, const SparseOptions& options = {},
                                    SparseStats* stats = nullptr);

// Full pivot-innermost result in O(n * T_sssp). The upper triangle comes from
// solve_row_block on g, the lower triangle from solve_row_block on the reversed
// graph, transposed. Exactly 2n SSSP calls.
DistMatrix incorrect_apsp_sparse(const Graph& g, const SparseOptions& options = {},
                                 SparseStats* stats = nullptr);

}  // namespace loopswap
