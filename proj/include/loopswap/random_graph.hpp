#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "loopswap/errors.hpp"
#include "loopswap/graph.hpp"

namespace loopswap {

enum class NegativeWeights {
  kNone,       // weights uniform in [weight_min, weight_max], weight_min >= 0
  kRejection,  // weights uniform in [weight_min, weight_max]; resample the
               // whole graph until it has no negative cycle
  kPotential,  // w(u, v) = base + p(u) - p(v) with base uniform in
               // [0, weight_max] and potentials uniform in [0, -weight_min];
               // never has a negative cycle
};

struct RandomGraphSpec {
  std::size_t n_min = 4;
  std::size_t n_max = 40;
  // Each trial picks one density uniformly; every ordered pair u != v is an
  // edge with that probability.
  std::vector<double> densities{0.1, 0.5, 0.9};
  std::int64_t weight_min = 0;
  std::int64_t weight_max = 20;
  NegativeWeights negatives = NegativeWeights::kNone;
  std::size_t max_attempts = 1000;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

// Throws std::invalid_argument for an inconsistent spec.
void check_spec(const RandomGraphSpec& spec);

// Deterministic stream for one trial: (seed, trial) alone reproduces it.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// Throws GenerationExhausted when rejection sampling hits max_attempts.
Graph random_graph(const RandomGraphSpec& spec, std::uint64_t seed, std::uint64_t trial);

// Single draw with fixed n and density from an existing stream.
Graph random_graph(std::size_t n, double density, const RandomGraphSpec& spec,
                   std::mt19937_64& rng);

}  // namespace loopswap
