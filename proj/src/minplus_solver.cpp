#include "loopswap/minplus_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "loopswap/relaxation.hpp"

namespace loopswap {

namespace {

constexpr std::size_t kRowBlock = 32;
constexpr std::size_t kColBlock = 64;

void require_same_size(const DistMatrix& a, const DistMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("minplus: dimension mismatch");
}

}  // namespace

DistMatrix minplus(const DistMatrix& a, const DistMatrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  const DistMatrix bt = b.transposed();
  DistMatrix c(n);
  for (std::size_t i0 = 0; i0 < n; i0 += kRowBlock) {
    const std::size_t i1 = std::min(n, i0 + kRowBlock);
    for (std::size_t j0 = 0; j0 < n; j0 += kColBlock) {
      const std::size_t j1 = std::min(n, j0 + kColBlock);
      for (std::size_t i = i0; i < i1; ++i) {
        const auto lhs = a.row(i);
        for (std::size_t j = j0; j < j1; ++j) {
          const auto rhs = bt.row(j);
          Weight best = kInfinity;
          for (std::size_t k = 0; k < n; ++k) {
            if (lhs[k].is_infinite() || rhs[k].is_infinite()) continue;
            const Weight through = lhs[k] + rhs[k];
            if (through < best) best = through;
          }
          c(i, j) = best;
        }
      }
    }
  }
  return c;
}

DistMatrix minplus_naive(const DistMatrix& a, const DistMatrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  DistMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Weight best = kInfinity;
      for (std::size_t k = 0; k < n; ++k) best = std::min(best, a(i, k) + b(k, j));
      c(i, j) = best;
    }
  }
  return c;
}

DistMatrix graph_square(const DistMatrix& a) { return minplus(a, a); }

DistMatrix mask_descending(const DistMatrix& v) {
  DistMatrix out = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) out(i, j) = kInfinity;
  }
  return out;
}

DistMatrix mask_ascending(const DistMatrix& v) {
  DistMatrix out = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) out(i, j) = kInfinity;
  }
  return out;
}

std::size_t doubling_levels(std::size_t n) {
  std::size_t levels = 0;
  while ((std::size_t{1} << levels) < n) ++levels;
  return levels;
}

OracleStats expected_oracle_stats(std::size_t n) {
  const std::size_t levels = doubling_levels(n);
  return OracleStats{levels + 1, 2 * levels + 2};
}

ValleyClosure valley_closure(const DistMatrix& a, const ApspOracle& oracle,
                             const LevelObserver& observer) {
  const std::size_t n = a.size();
  const std::size_t levels = doubling_levels(n);
  ValleyClosure result;
  OracleStats& stats = result.stats;

  DistMatrix v = graph_square(a);
  ++stats.minplus_calls;
  if (observer) observer(0, v);

  for (std::size_t level = 1; level <= levels; ++level) {
    const std::size_t block = std::size_t{1} << (levels - level + 1);
    const std::size_t half = block / 2;
    auto in_lower_half = [&](std::size_t x) { return x % block < half; };

    DistMatrix lower = DistMatrix::identity(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_lower_half(x)) continue;
      for (std::size_t y = x - x % block; y < std::min(n, x - x % block + half); ++y) {
        lower(x, y) = v(x, y);
      }
    }
    DistMatrix closure = oracle(lower);
    ++stats.apsp_calls;
    for (std::size_t x = 0; x < n; ++x) {
      if (closure(x, x) < Weight(0)) {
        throw ContractViolation("valley_closure: oracle produced a negative diagonal at vertex " +
                                std::to_string(x + 1));
      }
    }

    DistMatrix enter(n);  // u -> a, a in a lower half, a < u
    DistMatrix leave(n);  // b -> v, b in a lower half, b < v
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (in_lower_half(y) && y < x) enter(x, y) = v(x, y);
        if (in_lower_half(x) && x < y) leave(x, y) = v(x, y);
      }
    }
    const DistMatrix folded = minplus(minplus(enter, closure), leave);
    stats.minplus_calls += 2;

    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && !in_lower_half(std::min(x, y))) v(x, y) = std::min(v(x, y), folded(x, y));
      }
    }
    if (observer) observer(level, v);
  }

  result.valley = std::move(v);
  return result;
}

namespace {

// M[i][j] for i <= j; cells below the diagonal are not meaningful.
DistMatrix upper_half(const DistMatrix& adjacency, const ApspOracle& oracle, OracleStats& stats) {
  ValleyClosure closure = valley_closure(adjacency, oracle);
  stats = closure.stats;
  const DistMatrix increasing = oracle(mask_ascending(adjacency));
  ++stats.apsp_calls;
  DistMatrix answer = minplus(closure.valley, increasing);
  ++stats.minplus_calls;
  return answer;
}

}  // namespace

MinplusSolve incorrect_apsp_minplus(const Graph& g, const ApspOracle& oracle) {
  const DistMatrix adjacency = adjacency_matrix(g);
  const std::size_t n = adjacency.size();
  MinplusSolve solve;
  const DistMatrix upper = upper_half(adjacency, oracle, solve.forward);
  const DistMatrix lower = upper_half(adjacency.transposed(), oracle, solve.reverse);

  solve.matrix = DistMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) solve.matrix(i, j) = i <= j ? upper(i, j) : lower(j, i);
  }
  return solve;
}

MinplusSolve incorrect_apsp_minplus(const Graph& g) { return incorrect_apsp_minplus(g, apsp_kij); }

}  // namespace loopswap
