#include "loopswap/random_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace loopswap {

void check_spec(const RandomGraphSpec& spec) {
  if (spec.n_min < 1 || spec.n_min > spec.n_max) {
    throw std::invalid_argument("vertex range must satisfy 1 <= min <= max");
  }
  if (spec.densities.empty()) throw std::invalid_argument("at least one density is required");
  for (double d : spec.densities) {
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  }
  if (spec.weight_min > spec.weight_max) {
    throw std::invalid_argument("weight range must satisfy min <= max");
  }
  if (spec.negatives == NegativeWeights::kNone && spec.weight_min < 0) {
    throw std::invalid_argument("negative weights require a negative-weight mode");
  }
  if (spec.negatives == NegativeWeights::kPotential && spec.weight_max < 0) {
    throw std::invalid_argument("potential mode needs a non-negative weight maximum");
  }
  if (spec.max_attempts == 0) throw std::invalid_argument("max_attempts must be positive");
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

namespace {

Graph draw(std::size_t n, double density, const RandomGraphSpec& spec, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  if (spec.negatives == NegativeWeights::kPotential) {
    const std::int64_t spread = -std::min<std::int64_t>(spec.weight_min, 0);
    std::uniform_int_distribution<std::int64_t> potential(0, spread);
    std::uniform_int_distribution<std::int64_t> base(0, spec.weight_max);
    std::vector<std::int64_t> p(n);
    for (auto& x : p) x = potential(rng);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v || !keep(rng)) continue;
        edges.push_back({u, v, Weight(base(rng) + p[u] - p[v])});
      }
    }
    return Graph(n, std::move(edges), spec.weight_max + spread);
  }
  std::uniform_int_distribution<std::int64_t> weight(spec.weight_min, spec.weight_max);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !keep(rng)) continue;
      edges.push_back({u, v, Weight(weight(rng))});
    }
  }
  return Graph(n, std::move(edges), std::max(-spec.weight_min, spec.weight_max));
}

}  // namespace

Graph random_graph(std::size_t n, double density, const RandomGraphSpec& spec,
                   std::mt19937_64& rng) {
  check_spec(spec);
  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Graph g = draw(n, density, spec, rng);
    if (spec.negatives != NegativeWeights::kRejection || validate_no_negative_cycle(g)) return g;
  }
  throw GenerationExhausted("no negative-cycle-free graph with n = " + std::to_string(n) +
                            ", density " + std::to_string(density) + " after " +
                            std::to_string(spec.max_attempts) + " attempts");
}

Graph random_graph(const RandomGraphSpec& spec, std::uint64_t seed, std::uint64_t trial) {
  check_spec(spec);
  std::mt19937_64 rng = trial_rng(seed, trial);
  std::uniform_int_distribution<std::size_t> pick_n(spec.n_min, spec.n_max);
  std::uniform_int_distribution<std::size_t> pick_density(0, spec.densities.size() - 1);
  const std::size_t n = pick_n(rng);
  const double density = spec.densities[pick_density(rng)];
  return random_graph(n, density, spec, rng);
}

}  // namespace loopswap
