#pragma once

#include <cstddef>
#include <functional>

#include "loopswap/graph.hpp"

namespace loopswap {

// C[i][j] = min_k A[i][k] + B[k][j]. Cache-blocked kernel over a transposed
// copy of B so both operands stream contiguously.
DistMatrix minplus(const DistMatrix& a, const DistMatrix& b);

// Textbook triple loop. Kept as an independent reference for the kernel.
DistMatrix minplus_naive(const DistMatrix& a, const DistMatrix& b);

// a (.) a. With a zero diagonal this is the best path of at most two edges.
DistMatrix graph_square(const DistMatrix& a);

// Copy with cells i < j set to infinity (keeps i >= j: descending steps).
DistMatrix mask_descending(const DistMatrix& v);
// Copy with cells i > j set to infinity (keeps i <= j: ascending steps).
DistMatrix mask_ascending(const DistMatrix& v);

// Any all-pairs shortest path procedure on a zero-diagonal matrix without
// negative cycles.
using ApspOracle = std::function<DistMatrix(const DistMatrix&)>;

struct OracleStats {
  std::size_t apsp_calls = 0;
  std::size_t minplus_calls = 0;

  friend bool operator==(const OracleStats&, const OracleStats&) = default;
};

// ceil(log2 n); 0 for n <= 1.
std::size_t doubling_levels(std::size_t n);

// Call budget of one orientation of incorrect_apsp_minplus on n vertices:
// levels + 1 oracle calls and 2 * levels + 2 products.
OracleStats expected_oracle_stats(std::size_t n);

struct ValleyClosure {
  DistMatrix valley;
  OracleStats stats;
};

// Observes the working matrix after the square (level 0) and after each level.
using LevelObserver = std::function<void(std::size_t level, const DistMatrix&)>;

// Minimum valley-path weights in the graph square of a, i.e. for every pair
// (i, j) the cheapest walk i -> j in a (.) a whose interior vertices all lie
// below min(i, j).
//
// Works top-down over aligned dyadic blocks of vertex ids. Before level l,
// cell (u, v) holds the best walk whose interior stays below the start of the
// level-(l-1) half-block holding min(u, v). Level l folds every lower half
// into its upper half:
//   D = oracle(block-diagonal of the lower halves)
//   F = L (.) D (.) R,  L[u][a] = V[u][a] for lower-half a < u,
//                       R[b][v] = V[b][v] for lower-half b < v,
// and cells whose smaller endpoint lies in an upper half take min(V, F).
// Every level issues one oracle call on an n x n matrix and two products.
//
// Throws ContractViolation if the oracle returns a negative diagonal entry.
ValleyClosure valley_closure(const DistMatrix& a, const ApspOracle& oracle,
                             const LevelObserver& observer = {});

struct MinplusSolve {
  DistMatrix matrix;
  OracleStats forward;
  OracleStats reverse;
};

// Pivot-innermost result through products and oracle calls only. For i <= j:
//   M = valley_closure(A(g)) (.) oracle(A(g) restricted to edges u < v),
// the lower triangle from the same computation on the reversed graph.
MinplusSolve incorrect_apsp_minplus(const Graph& g, const ApspOracle& oracle);
MinplusSolve incorrect_apsp_minplus(const Graph& g);

}  // namespace loopswap
