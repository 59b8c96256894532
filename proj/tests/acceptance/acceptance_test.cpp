// Acceptance gate: one PASS/FAIL line per criterion. Exit status is non-zero
// when any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "loopswap/harness.hpp"
#include "loopswap/minplus_solver.hpp"
#include "loopswap/path_theory.hpp"
#include "loopswap/random_graph.hpp"
#include "loopswap/relaxation.hpp"
#include "loopswap/sparse_solver.hpp"
#include "reference.hpp"

namespace {

using namespace loopswap;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 for none
  bool gating;
  std::function<Outcome()> run;
};

constexpr double kDensities[] = {0.1, 0.5, 0.9};

// Graph for one trial of a sweep: n, density and weight regime are cycled so
// every combination appears; the regime alternates between non-negative
// weights and mixed signs without negative cycles.
Graph sweep_graph(std::size_t trial, std::size_t n_lo, std::size_t n_hi, std::uint64_t seed) {
  const std::size_t span = n_hi - n_lo + 1;
  const std::size_t n = n_lo + trial % span;
  const double density = kDensities[(trial / span) % 3];
  const bool mixed = (trial / (3 * span)) % 2 == 1;
  RandomGraphSpec spec;
  spec.weight_min = mixed ? -10 : 0;
  spec.weight_max = 20;
  spec.negatives = mixed ? NegativeWeights::kPotential : NegativeWeights::kNone;
  std::mt19937_64 rng = trial_rng(seed, trial);
  return random_graph(n, density, spec, rng);
}

// Small graph (n <= 6) for the enumeration-based checks; odd trials use
// mixed-sign weights resampled until free of negative cycles.
Graph small_trial_graph(std::size_t trial, std::uint64_t seed) {
  std::mt19937_64 rng = trial_rng(seed, trial);
  const std::size_t n = 1 + trial % 6;
  const double density = kDensities[(trial / 6) % 3];
  return trial % 2 ? reference::small_graph(n, density, -5, 15, rng)
                   : reference::small_graph(n, density, 0, 15, rng);
}

std::string cell(Vertex i, Vertex j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

// First differing cell of two matrices, empty if equal.
std::string first_difference(const DistMatrix& got, const DistMatrix& want) {
  if (got.size() != want.size()) return "dimension differs";
  for (Vertex i = 0; i < got.size(); ++i)
    for (Vertex j = 0; j < got.size(); ++j)
      if (got(i, j) != want(i, j))
        return cell(i, j) + " got " + got(i, j).to_string() + " want " + want(i, j).to_string();
  return {};
}

Outcome differential(std::size_t trials, std::size_t n_lo, std::size_t n_hi, std::uint64_t seed,
                     const std::function<DistMatrix(const Graph&)>& candidate,
                     const std::function<DistMatrix(const Graph&)>& baseline) {
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = sweep_graph(t, n_lo, n_hi, seed);
    const std::string diff = first_difference(candidate(g), baseline(g));
    if (!diff.empty()) {
      return {false, "trial " + std::to_string(t) + " n=" + std::to_string(g.vertex_count()) +
                         ": " + diff};
    }
  }
  return {true, std::to_string(trials) + " graphs, n in [" + std::to_string(n_lo) + ", " +
                    std::to_string(n_hi) + "], 3 densities x 2 weight regimes, all cells equal"};
}

Outcome golden_example() {
  const std::filesystem::path input =
      std::filesystem::temp_directory_path() / "loopswap-acceptance-golden.txt";
  std::ofstream(input) << fixtures::kSwapExample;
  std::string failures;
  for (auto [algo, want] : {std::pair{Algo::kKij, fixtures::kSwapTrue},
                            std::pair{Algo::kIjk, fixtures::kSwapInnermost}}) {
    ComputeConfig cfg;
    cfg.input.path = input.string();
    cfg.algo = algo;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cmd_compute(cfg, out, err);
    if (code != 0 || out.str() != want) {
      failures += std::string(algo_name(algo)) + " output differs; ";
    }
  }
  std::filesystem::remove(input);
  const DistMatrix a = adjacency_matrix(fixtures::swap_example());
  const Weight kij_cell = apsp_kij(a)(1, 0);
  const Weight ijk_cell = incorrect_apsp_ijk(a)(1, 0);
  if (kij_cell != Weight(3) || ijk_cell != kInfinity) failures += "cell (2, 1) wrong; ";
  if (!failures.empty()) return {false, failures};
  return {true, "kij and ijk outputs byte-identical to the expected matrices, cell (2, 1) = " +
                    kij_cell.to_string() + " vs " + ijk_cell.to_string()};
}

Outcome characterization_equivalence() {
  const std::size_t n = 5;
  const RelaxSequence seq = RelaxSequence::ijk(n);
  const auto literal_order = reference::ijk_order(n);
  std::size_t realized = 0;
  const auto paths = reference::all_simple_paths(n, 5);
  for (const auto& p : paths) {
    const Path path(p);
    const bool brute = is_realized_bruteforce(path, seq);
    const bool shape = is_realized_characterization(path);
    const bool literal = reference::realized(p, literal_order);
    if (brute != shape || brute != literal) {
      std::string ids;
      for (Vertex v : p) ids += std::to_string(v + 1) + " ";
      return {false, "path " + ids + "brute=" + std::to_string(brute) +
                         " characterization=" + std::to_string(shape) +
                         " literal=" + std::to_string(literal)};
    }
    realized += brute;
  }
  return {true, std::to_string(paths.size()) + " simple paths on 5 vertices (1 to 4 edges), " +
                    std::to_string(realized) + " realized, zero mismatches"};
}

Outcome oracle_identity() {
  const std::size_t trials = 240;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = small_trial_graph(t, 303);
    const DistMatrix a = adjacency_matrix(g);
    const DistMatrix ijk = incorrect_apsp_ijk(a);
    const std::string diff = first_difference(oracle_min_realized_matrix(g), ijk);
    if (!diff.empty()) return {false, "trial " + std::to_string(t) + ": " + diff};
    // Second, independent oracle: literal realization over every simple path.
    const auto order = reference::ijk_order(g.vertex_count());
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
      for (Vertex j = 0; j < g.vertex_count(); ++j) {
        const Weight want =
            i == j ? Weight(0)
                   : reference::min_path(a, i, j, [&](const auto& p) { return reference::realized(p, order); });
        if (ijk(i, j) != want) {
          return {false, "trial " + std::to_string(t) + " literal oracle " + cell(i, j)};
        }
      }
    }
  }
  return {true, std::to_string(trials) + " graphs, n <= 6, half with negative weights, all cells equal"};
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

Outcome minplus_equivalence() {
  const std::size_t trials = 500;
  std::string budget_miss;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = sweep_graph(t, 2, 33, 505);
    const MinplusSolve solve = incorrect_apsp_minplus(g);
    const std::string diff = first_difference(solve.matrix, incorrect_apsp_ijk(adjacency_matrix(g)));
    if (!diff.empty()) {
      return {false, "trial " + std::to_string(t) + " n=" + std::to_string(g.vertex_count()) +
                         ": " + diff};
    }
    const std::size_t levels = ceil_log2(g.vertex_count());
    const OracleStats stated{2 * levels + 1, levels + 2};
    if (budget_miss.empty() && (solve.forward != stated || solve.reverse != stated)) {
      budget_miss = "n=" + std::to_string(g.vertex_count()) + " measured " +
                    std::to_string(solve.forward.apsp_calls) + " oracle calls and " +
                    std::to_string(solve.forward.minplus_calls) + " products per orientation, " +
                    "stated " + std::to_string(stated.apsp_calls) + " and " +
                    std::to_string(stated.minplus_calls);
    }
  }
  const std::string exact = std::to_string(trials) +
                            " graphs, n in [2, 33], both regimes, all cells equal";
  if (!budget_miss.empty()) {
    return {false, "exactness held (" + exact + "); call budget not met: " + budget_miss};
  }
  return {true, exact + "; call budget met"};
}

Outcome kij_prefix_property() {
  const std::size_t trials = 200;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = small_trial_graph(t, 707);
    const std::size_t n = g.vertex_count();
    const DistMatrix a = adjacency_matrix(g);
    const RelaxSequence full = RelaxSequence::kij(n);
    for (std::size_t limit = 0; limit <= n; ++limit) {
      const DistMatrix got = run_relaxation(a, full.prefix(limit * n * n));
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
          // Vertex ids below `limit` are exactly the 1-based ids <= limit.
          const Weight want = reference::min_path(a, i, j, [&](const reference::VertexList& p) {
            for (std::size_t x = 1; x + 1 < p.size(); ++x)
              if (p[x] >= limit) return false;
            return true;
          });
          if (got(i, j) != want) {
            return {false, "trial " + std::to_string(t) + " prefix " + std::to_string(limit) +
                               " cell " + cell(i, j)};
          }
        }
      }
    }
  }
  return {true, std::to_string(trials) + " graphs, n <= 6, every prefix length t * n^2"};
}

Outcome proper_valley_property() {
  const std::size_t trials = 200;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = small_trial_graph(t, 808);
    const std::size_t n = g.vertex_count();
    const DistMatrix a = adjacency_matrix(g);
    const DistMatrix square = graph_square(a);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (i == j) continue;
        const Weight proper = reference::min_path(a, i, j, reference::proper);
        const Weight valley = reference::min_path(square, i, j, reference::valley);
        if (proper != valley) {
          return {false, "trial " + std::to_string(t) + " cell " + cell(i, j) + " proper " +
                             proper.to_string() + " valley " + valley.to_string()};
        }
      }
    }
  }
  return {true, std::to_string(trials) + " graphs, n <= 6, every ordered pair"};
}

Outcome performance_report() {
  BenchConfig sparse_cfg;
  sparse_cfg.sizes = {512};
  sparse_cfg.algos = {"ijk", "sparse"};
  sparse_cfg.regimes = {"sparse"};
  BenchConfig kernel_cfg;
  kernel_cfg.sizes = {256};
  kernel_cfg.algos = {"kernel-naive", "kernel-blocked"};
  kernel_cfg.regimes = {};

  std::map<std::string, long long> median;
  for (const BenchConfig* cfg : {&sparse_cfg, &kernel_cfg}) {
    std::ostringstream out;
    std::ostringstream err;
    if (cmd_bench(*cfg, out, err) != 0) return {false, "bench failed: " + err.str()};
    std::istringstream csv(out.str());
    std::string line;
    std::getline(csv, line);
    while (std::getline(csv, line)) {
      std::vector<std::string> fields;
      std::stringstream row(line);
      for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
      median[fields[0]] = std::stoll(fields[3]);
    }
  }
  // cmd_bench already exits non-zero when the kernels disagree.
  const bool sparse_wins = median["sparse"] < median["ijk"];
  const bool blocked_ok = median["kernel-blocked"] <= median["kernel-naive"];
  std::ostringstream detail;
  detail << "n=512 sparse regime: sparse " << median["sparse"] / 1000 << " us vs ijk "
         << median["ijk"] / 1000 << " us; n=256 kernels equal, blocked "
         << median["kernel-blocked"] / 1000 << " us vs naive " << median["kernel-naive"] / 1000
         << " us";
  return {sparse_wins && blocked_ok, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "golden example", 1, true, golden_example},
      {"AC2", "realization characterization, exhaustive n=5", 60, true,
       characterization_equivalence},
      {"AC3", "enumeration oracle equals pivot-innermost result", 120, true, oracle_identity},
      {"AC4", "sparse solver equals pivot-innermost result", 300, true,
       [] {
         return differential(
             1000, 2, 40, 404, [](const Graph& g) { return incorrect_apsp_sparse(g); },
             [](const Graph& g) { return incorrect_apsp_ijk(adjacency_matrix(g)); });
       }},
      {"AC5", "min-plus solver equals pivot-innermost result, oracle budget", 300, true,
       minplus_equivalence},
      {"AC6", "three innermost passes equal true distances", 120, true,
       [] {
         return differential(
             500, 1, 40, 606, [](const Graph& g) { return triple_ijk(adjacency_matrix(g)); },
             [](const Graph& g) { return apsp_kij(adjacency_matrix(g)); });
       }},
      {"AC7", "pivot-outermost prefixes bound intermediate ids", 120, true, kij_prefix_property},
      {"AC8", "proper paths in G equal valley paths in the square", 0, true,
       proper_valley_property},
      {"AC9", "performance report (non-gating)", 0, false, performance_report},
  };

  bool gate = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.pass = false;
      outcome.detail += "; over the " + std::to_string(static_cast<int>(c.time_limit_s)) +
                        " s limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << c.id << ' ' << (outcome.pass ? "PASS" : "FAIL") << ' ' << c.title << " ["
              << timing << "] " << outcome.detail << std::endl;
    if (c.gating && !outcome.pass) gate = false;
  }
  std::cout << (gate ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return gate ? 0 : 1;
}
