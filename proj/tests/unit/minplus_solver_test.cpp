#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "loopswap/errors.hpp"
#include "loopswap/minplus_solver.hpp"
#include "loopswap/random_graph.hpp"
#include "loopswap/relaxation.hpp"
#include "reference.hpp"

namespace loopswap {
namespace {

DistMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> w(-30, 30);
  std::bernoulli_distribution gap(0.2);
  DistMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gap(rng) ? kInfinity : Weight(w(rng));
  return m;
}

TEST(MinplusKernel, BlockedMatchesReference) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 31u, 32u, 33u, 65u, 100u}) {
    const DistMatrix a = random_matrix(n, rng);
    const DistMatrix b = random_matrix(n, rng);
    const DistMatrix expected = reference::minplus(a, b);
    EXPECT_EQ(minplus(a, b), expected) << "n=" << n;
    EXPECT_EQ(minplus_naive(a, b), expected) << "n=" << n;
  }
}

TEST(MinplusKernel, DimensionMismatchThrows) {
  EXPECT_THROW(minplus(DistMatrix(2), DistMatrix(3)), std::invalid_argument);
}

TEST(MinplusKernel, Masks) {
  std::mt19937_64 rng(2);
  const DistMatrix m = random_matrix(5, rng);
  const DistMatrix d = mask_descending(m);
  const DistMatrix a = mask_ascending(m);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(d(i, j), i >= j ? m(i, j) : kInfinity);
      EXPECT_EQ(a(i, j), i <= j ? m(i, j) : kInfinity);
    }
  }
}

TEST(Levels, CeilLog2) {
  EXPECT_EQ(doubling_levels(1), 0u);
  EXPECT_EQ(doubling_levels(2), 1u);
  EXPECT_EQ(doubling_levels(32), 5u);
  EXPECT_EQ(doubling_levels(33), 6u);
}

// Best walk in the square whose interior lies strictly below `bound`.
Weight best_below(const DistMatrix& square, Vertex u, Vertex v, Vertex bound) {
  return reference::min_path(square, u, v, [&](const reference::VertexList& p) {
    for (std::size_t t = 1; t + 1 < p.size(); ++t)
      if (p[t] >= bound) return false;
    return true;
  });
}

TEST(ValleyClosure, EveryLevelHoldsTheDyadicBound) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph g = reference::small_graph(n, 0.5, -3, 9, rng);
    const DistMatrix a = adjacency_matrix(g);
    const DistMatrix square = reference::minplus(a, a);
    const std::size_t levels = doubling_levels(n);
    std::size_t seen = 0;
    valley_closure(a, apsp_kij, [&](std::size_t level, const DistMatrix& v) {
      ++seen;
      const std::size_t width = std::size_t{1} << (levels - level);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex w = 0; w < n; ++w) {
          if (u == w) continue;
          const Vertex bound = std::min(u, w) / width * width;
          EXPECT_EQ(v(u, w), best_below(square, u, w, bound))
              << "trial " << trial << " level " << level << " cell " << u << "," << w;
        }
      }
    });
    EXPECT_EQ(seen, levels + 1);
  }
}

TEST(ValleyClosure, LevelsOnlyImprove) {
  RandomGraphSpec spec;
  spec.n_min = spec.n_max = 20;
  const Graph g = random_graph(spec, 3, 0);
  DistMatrix previous;
  valley_closure(adjacency_matrix(g), apsp_kij, [&](std::size_t level, const DistMatrix& v) {
    if (level > 0) {
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) EXPECT_LE(v(i, j), previous(i, j));
    }
    previous = v;
  });
}

TEST(ValleyClosure, NegativeOracleDiagonalIsAContractViolation) {
  const DistMatrix a = adjacency_matrix(fixtures::swap_example());
  const ApspOracle broken = [](const DistMatrix& m) {
    DistMatrix out = apsp_kij(m);
    out(0, 0) = Weight(-1);
    return out;
  };
  EXPECT_THROW(valley_closure(a, broken), ContractViolation);
}

TEST(MinplusSolver, GoldenExample) {
  EXPECT_EQ(incorrect_apsp_minplus(fixtures::swap_example()).matrix,
            fixtures::matrix(fixtures::kSwapInnermost));
}

TEST(MinplusSolver, OracleIsOnlyCalledThroughTheInterface) {
  RandomGraphSpec spec;
  spec.n_min = spec.n_max = 13;
  const Graph g = random_graph(spec, 6, 0);
  std::size_t calls = 0;
  const ApspOracle counting = [&](const DistMatrix& m) {
    ++calls;
    return reference::replay(m, reference::kij_order(m.size()));
  };
  const MinplusSolve solve = incorrect_apsp_minplus(g, counting);
  EXPECT_EQ(solve.matrix, incorrect_apsp_ijk(adjacency_matrix(g)));
  EXPECT_EQ(calls, solve.forward.apsp_calls + solve.reverse.apsp_calls);
  EXPECT_EQ(solve.forward, expected_oracle_stats(13));
  EXPECT_EQ(solve.reverse, expected_oracle_stats(13));
}

TEST(MinplusSolver, MatchesInnermostOrderAcrossPowersOfTwo) {
  RandomGraphSpec spec;
  spec.weight_min = -5;
  spec.negatives = NegativeWeights::kPotential;
  for (std::size_t n = 1; n <= 18; ++n) {
    spec.n_min = spec.n_max = n;
    for (std::uint64_t t = 0; t < 5; ++t) {
      const Graph g = random_graph(spec, n, t);
      EXPECT_EQ(incorrect_apsp_minplus(g).matrix, incorrect_apsp_ijk(adjacency_matrix(g)))
          << "n=" << n << " trial " << t;
    }
  }
}

}  // namespace
}  // namespace loopswap
