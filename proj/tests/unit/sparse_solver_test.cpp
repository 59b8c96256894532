#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "loopswap/errors.hpp"
#include "loopswap/random_graph.hpp"
#include "loopswap/relaxation.hpp"
#include "loopswap/sparse_solver.hpp"
#include "reference.hpp"

namespace loopswap {
namespace {

TEST(Sssp, EnginesAgreeWithReferenceDistances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Graph pos = reference::small_graph(n, 0.4, 0, 10, rng);
    const Graph mixed = reference::small_graph(n, 0.4, -3, 10, rng);
    const DistMatrix dp = reference::distances(pos);
    const DistMatrix dm = reference::distances(mixed);
    for (Vertex s = 0; s < n; ++s) {
      const auto d = sssp(pos, s, SsspEngine::kDijkstra).dist;
      const auto b = sssp(pos, s, SsspEngine::kBellmanFord).dist;
      const auto m = sssp(mixed, s).dist;
      for (Vertex t = 0; t < n; ++t) {
        EXPECT_EQ(d[t], dp(s, t));
        EXPECT_EQ(b[t], dp(s, t));
        EXPECT_EQ(m[t], dm(s, t));
      }
    }
  }
}

TEST(Sssp, DijkstraRefusesNegativeEdges) {
  const Graph g(2, {{0, 1, Weight(-1)}});
  EXPECT_THROW(sssp(g, 0, SsspEngine::kDijkstra), std::invalid_argument);
}

TEST(Sssp, BellmanFordReportsReachableNegativeCycle) {
  const Graph g(3, {{0, 1, Weight(1)}, {1, 2, Weight(-2)}, {2, 1, Weight(1)}});
  EXPECT_THROW(sssp(g, 0, SsspEngine::kBellmanFord), ContractViolation);
}

TEST(Sparse, RestrictedGraphKeepsEdgesTouchingTheLowIds) {
  const Graph g(4, {{0, 3, Weight(1)}, {3, 2, Weight(1)}, {2, 1, Weight(1)}, {3, 0, Weight(1)}});
  const Graph r = restricted_graph(g, 1);
  EXPECT_EQ(r.edge_count(), 3u);
  EXPECT_FALSE(r.edge_weight(3, 2).has_value());
}

TEST(Sparse, GoldenExample) {
  EXPECT_EQ(incorrect_apsp_sparse(fixtures::swap_example()),
            fixtures::matrix(fixtures::kSwapInnermost));
}

TEST(Sparse, MatchesInnermostOrderOnRandomGraphs) {
  RandomGraphSpec spec;
  spec.n_min = 1;
  spec.n_max = 24;
  spec.weight_min = -6;
  for (int trial = 0; trial < 200; ++trial) {
    spec.negatives = trial % 2 ? NegativeWeights::kPotential : NegativeWeights::kNone;
    spec.weight_min = trial % 2 ? -6 : 0;
    const Graph g = random_graph(spec, 99, trial);
    EXPECT_EQ(incorrect_apsp_sparse(g), incorrect_apsp_ijk(adjacency_matrix(g))) << "trial " << trial;
  }
}

TEST(Sparse, ThreadedRunIsIdenticalAndCountsSourcesOncePerRowAndColumn) {
  RandomGraphSpec spec;
  spec.n_min = spec.n_max = 20;
  const Graph g = random_graph(spec, 4, 0);
  SparseStats serial_stats;
  SparseStats threaded_stats;
  const DistMatrix serial = incorrect_apsp_sparse(g, {SsspEngine::kAuto, 1}, &serial_stats);
  const DistMatrix threaded = incorrect_apsp_sparse(g, {SsspEngine::kAuto, 4}, &threaded_stats);
  EXPECT_EQ(serial, threaded);
  EXPECT_EQ(serial_stats.sssp_calls.load(), 2 * g.vertex_count());
  EXPECT_EQ(threaded_stats.sssp_calls.load(), 2 * g.vertex_count());
}

TEST(Sparse, EnginesGiveTheSameAnswer) {
  RandomGraphSpec spec;
  spec.n_min = spec.n_max = 15;
  const Graph g = random_graph(spec, 8, 1);
  EXPECT_EQ(incorrect_apsp_sparse(g, {SsspEngine::kDijkstra, 1}),
            incorrect_apsp_sparse(g, {SsspEngine::kBellmanFord, 1}));
}

}  // namespace
}  // namespace loopswap
