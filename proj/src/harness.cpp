#include "loopswap/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "loopswap/minplus_solver.hpp"
#include "loopswap/path_theory.hpp"
#include "loopswap/relaxation.hpp"
#include "loopswap/sparse_solver.hpp"

namespace loopswap {

namespace {

constexpr std::pair<Algo, std::string_view> kAlgoNames[] = {
    {Algo::kKij, "kij"},
    {Algo::kIjk, "ijk"},
    {Algo::kTripleIjk, "triple-ijk"},
    {Algo::kSparse, "sparse"},
    {Algo::kMinplus, "minplus"},
};

}  // namespace

std::string_view algo_name(Algo algo) {
  for (auto [a, name] : kAlgoNames) {
    if (a == algo) return name;
  }
  return "unknown";
}

std::optional<Algo> parse_algo(std::string_view name) {
  for (auto [a, known] : kAlgoNames) {
    if (known == name) return a;
  }
  return std::nullopt;
}

std::vector<Algo> all_algos() {
  std::vector<Algo> out;
  for (auto [a, name] : kAlgoNames) out.push_back(a);
  return out;
}

DistMatrix run_algo(Algo algo, const Graph& g, unsigned threads) {
  switch (algo) {
    case Algo::kKij:
      return apsp_kij(adjacency_matrix(g));
    case Algo::kIjk:
      return incorrect_apsp_ijk(adjacency_matrix(g));
    case Algo::kTripleIjk:
      return triple_ijk(adjacency_matrix(g));
    case Algo::kSparse:
      return incorrect_apsp_sparse(g, SparseOptions{SsspEngine::kAuto, threads});
    case Algo::kMinplus:
      return incorrect_apsp_minplus(g).matrix;
  }
  throw std::logic_error("run_algo: unhandled algorithm");
}

Family algo_family(Algo algo) {
  return algo == Algo::kKij || algo == Algo::kTripleIjk ? Family::kTrueDistances
                                                        : Family::kPivotInnermost;
}

std::vector<Solver> make_solvers(std::span<const Algo> algos, unsigned threads) {
  std::vector<Solver> solvers;
  for (Algo algo : algos) {
    solvers.push_back(Solver{std::string(algo_name(algo)), algo_family(algo),
                             [algo, threads](const Graph& g) { return run_algo(algo, g, threads); }});
  }
  return solvers;
}

std::optional<Mismatch> verify_graph(const Graph& g, std::span<const Solver> solvers) {
  std::vector<DistMatrix> results;
  results.reserve(solvers.size());
  for (const Solver& s : solvers) results.push_back(s.run(g));

  for (Family family : {Family::kTrueDistances, Family::kPivotInnermost}) {
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      if (solvers[s].family == family) members.push_back(s);
    }
    if (members.size() < 2) continue;
    const std::size_t n = g.vertex_count();
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        const Weight reference = results[members.front()](i, j);
        bool differs = std::any_of(members.begin(), members.end(),
                                   [&](std::size_t s) { return results[s](i, j) != reference; });
        if (!differs) continue;
        Mismatch m{i, j, family, {}};
        for (std::size_t s : members) m.values.emplace_back(solvers[s].name, results[s](i, j));
        return m;
      }
    }
  }
  return std::nullopt;
}

std::string describe(const Mismatch& m) {
  std::ostringstream os;
  os << "mismatch at cell (" << m.i + 1 << ", " << m.j + 1 << "):";
  for (const auto& [name, value] : m.values) os << ' ' << name << '=' << value;
  return os.str();
}

namespace {

Graph load_graph(const InputConfig& input) {
  if (input.path == "-") {
    return parse_graph(std::cin, input.format, ParseOptions{input.weight_bound});
  }
  std::ifstream file(input.path);
  if (!file) throw InvalidGraph("cannot open input file '" + input.path + "'");
  return parse_graph(file, input.format, ParseOptions{input.weight_bound});
}

// Maps library exceptions onto the exit-code vocabulary.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NegativeCycleError& e) {
    err << "error: negative cycle: " << e.what() << '\n';
    return exit_code::kNegativeCycle;
  } catch (const GenerationExhausted& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kGenerationExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
}

void write_to(const std::string& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& emit) {
  if (path == "-") {
    emit(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  emit(file);
}

}  // namespace

int cmd_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg.input);
    require_no_negative_cycle(g);
    const DistMatrix m = run_algo(cfg.algo, g, cfg.threads);
    write_to(cfg.output, out, [&](std::ostream& os) { write_matrix(os, m); });
    return exit_code::kOk;
  });
}

int cmd_verify(const Graph& g, std::span<const Solver> solvers, std::ostream& out,
               std::ostream& err) {
  if (auto mismatch = verify_graph(g, solvers)) {
    err << "verify: " << describe(*mismatch) << '\n';
    return exit_code::kMismatch;
  }
  out << "verify: " << solvers.size() << " solvers agree on n=" << g.vertex_count()
      << " m=" << g.edge_count() << '\n';
  return exit_code::kOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg.input);
    require_no_negative_cycle(g);
    const auto solvers = make_solvers(cfg.algos, cfg.threads);
    return cmd_verify(g, solvers, out, err);
  });
}

int cmd_fuzz(const FuzzConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_spec(cfg.spec);
    auto solvers = make_solvers(cfg.algos, 1);
    solvers.insert(solvers.end(), cfg.extra_solvers.begin(), cfg.extra_solvers.end());

    struct Failure {
      std::size_t trial;
      std::optional<Graph> graph;
      std::string message;
      int code;
    };
    std::optional<Failure> first;
    std::mutex failure_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto record = [&](Failure f) {
      std::lock_guard lock(failure_mutex);
      if (!first || f.trial < first->trial) first = std::move(f);
      stop = true;
    };
    // Trials are claimed in increasing order and a claimed trial always
    // finishes, so the reported failure is the smallest failing index.
    auto worker = [&] {
      while (!stop) {
        const std::size_t trial = next++;
        if (trial >= cfg.trials) return;
        std::optional<Graph> g;
        try {
          g = random_graph(cfg.spec, cfg.seed, trial);
          if (auto mismatch = verify_graph(*g, solvers)) {
            record({trial, g, describe(*mismatch), exit_code::kMismatch});
          }
        } catch (const GenerationExhausted& e) {
          record({trial, std::nullopt, e.what(), exit_code::kGenerationExhausted});
        } catch (const std::exception& e) {
          record({trial, g, std::string("solver error: ") + e.what(), exit_code::kMismatch});
        }
      }
    };

    const unsigned threads = std::max(1u, cfg.threads == 0 ? std::thread::hardware_concurrency()
                                                           : cfg.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    if (!first) {
      out << "fuzz: " << cfg.trials << " trials passed (seed " << cfg.seed << ")\n";
      return exit_code::kOk;
    }
    err << "fuzz: seed " << cfg.seed << " trial " << first->trial << ": " << first->message << '\n';
    if (first->graph) {
      const auto path = std::filesystem::path(cfg.reproducer_dir) /
                        ("fuzz-seed" + std::to_string(cfg.seed) + "-trial" +
                         std::to_string(first->trial) + ".txt");
      std::ofstream file(path);
      write_edge_list(file, *first->graph);
      err << "fuzz: reproducer written to " << path.string() << '\n';
    }
    return first->code;
  });
}

namespace {

template <typename F>
std::int64_t median_ns(std::size_t reps, F&& run) {
  run();  // warmup
  std::vector<std::int64_t> samples;
  samples.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

DistMatrix random_dense_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> weight(-50, 100);
  std::bernoulli_distribution missing(0.1);
  DistMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = missing(rng) ? kInfinity : Weight(weight(rng));
  }
  return m;
}

}  // namespace

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.reps < 5) throw std::invalid_argument("bench needs at least 5 repetitions");
    std::vector<Algo> solvers;
    bool kernels = false;
    for (const std::string& name : cfg.algos) {
      if (name == "kernel-naive" || name == "kernel-blocked") {
        kernels = true;
      } else if (auto algo = parse_algo(name)) {
        solvers.push_back(*algo);
      } else {
        throw std::invalid_argument("unknown bench algorithm '" + name + "'");
      }
    }
    for (const std::string& regime : cfg.regimes) {
      if (regime != "sparse" && regime != "dense") {
        throw std::invalid_argument("unknown regime '" + regime + "'");
      }
    }
    auto wants = [&](std::string_view name) {
      return std::find(cfg.algos.begin(), cfg.algos.end(), name) != cfg.algos.end();
    };

    std::ostringstream csv;
    csv << "algo,n,m,median_ns,reps\n";
    bool kernels_agree = true;
    for (std::size_t n : cfg.sizes) {
      if (n == 0) throw std::invalid_argument("bench sizes must be positive");
      for (std::size_t r = 0; r < cfg.regimes.size(); ++r) {
        const bool sparse = cfg.regimes[r] == "sparse";
        const double density =
            n < 2 ? 0.0 : (sparse ? std::min(1.0, 4.0 / static_cast<double>(n - 1)) : 0.5);
        RandomGraphSpec spec;
        spec.weight_min = 0;
        spec.weight_max = 100;
        std::mt19937_64 rng = trial_rng(cfg.seed, n * 2 + (sparse ? 0 : 1));
        const Graph g = random_graph(n, density, spec, rng);
        for (Algo algo : solvers) {
          const auto ns = median_ns(cfg.reps, [&] { return run_algo(algo, g); });
          csv << algo_name(algo) << ',' << n << ',' << g.edge_count() << ',' << ns << ','
              << cfg.reps << '\n';
        }
      }
      if (kernels) {
        std::mt19937_64 rng = trial_rng(cfg.seed, n * 2 + 7919);
        const DistMatrix a = random_dense_matrix(n, rng);
        const DistMatrix b = random_dense_matrix(n, rng);
        if (minplus(a, b) != minplus_naive(a, b)) kernels_agree = false;
        if (wants("kernel-naive")) {
          csv << "kernel-naive," << n << ',' << n * n << ','
              << median_ns(cfg.reps, [&] { return minplus_naive(a, b); }) << ',' << cfg.reps
              << '\n';
        }
        if (wants("kernel-blocked")) {
          csv << "kernel-blocked," << n << ',' << n * n << ','
              << median_ns(cfg.reps, [&] { return minplus(a, b); }) << ',' << cfg.reps << '\n';
        }
      }
    }
    write_to(cfg.output, out, [&](std::ostream& os) { os << csv.str(); });
    if (!kernels_agree) {
      err << "bench: blocked and naive min-plus kernels disagree\n";
      return exit_code::kMismatch;
    }
    return exit_code::kOk;
  });
}

int cmd_check_path(const CheckPathConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.path.empty()) throw std::invalid_argument("path must contain a vertex");
    const std::int64_t largest = *std::max_element(cfg.path.begin(), cfg.path.end());
    const std::size_t n = cfg.n.value_or(static_cast<std::size_t>(std::max<std::int64_t>(largest, 1)));
    if (largest > static_cast<std::int64_t>(n)) {
      throw std::invalid_argument("vertex " + std::to_string(largest) + " exceeds n = " +
                                  std::to_string(n));
    }
    const Path path = Path::from_one_based(cfg.path);

    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "path:";
    for (std::int64_t id : cfg.path) out << ' ' << id;
    out << "\nn: " << n << '\n';
    out << "increasing: " << flag(is_increasing(path)) << '\n';
    out << "decreasing: " << flag(is_decreasing(path)) << '\n';
    out << "valley: " << flag(is_valley(path)) << '\n';
    out << "proper: " << flag(is_proper(path)) << '\n';
    out << "realized-characterization: " << flag(is_realized_characterization(path)) << '\n';
    if (path.vertices().size() <= kBruteForcePathCap) {
      out << "realized-bruteforce: " << flag(is_realized_bruteforce(path, RelaxSequence::ijk(n)))
          << '\n';
    } else {
      out << "realized-bruteforce: skipped (more than " << kBruteForcePathCap << " vertices)\n";
    }
    return exit_code::kOk;
  });
}

int cmd_validate(const ValidateConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg.input);
    require_no_negative_cycle(g);
    out << "valid: n=" << g.vertex_count() << " m=" << g.edge_count()
        << " M=" << g.weight_bound() << ", no negative cycle\n";
    return exit_code::kOk;
  });
}

}  // namespace loopswap
