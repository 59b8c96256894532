#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopswap/harness.hpp"

namespace {

using loopswap::Algo;

// Parses "LO..HI" (or a single value meaning LO == HI).
template <typename T>
std::pair<T, T> parse_range(const std::string& text) {
  auto parse_one = [&](std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw CLI::ValidationError("range", "expected LO..HI, got '" + text + "'");
    }
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const T v = parse_one(text);
    return {v, v};
  }
  const auto lo = parse_one(std::string_view(text).substr(0, dots));
  const auto hi = parse_one(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return {lo, hi};
}

Algo to_algo(const std::string& name) {
  if (auto algo = loopswap::parse_algo(name)) return *algo;
  throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
}

std::vector<Algo> to_algos(const std::vector<std::string>& names) {
  if (names.empty()) return loopswap::all_algos();
  std::vector<Algo> out;
  for (const auto& name : names) out.push_back(to_algo(name));
  return out;
}

const std::vector<std::string> kAlgoChoices{"kij", "ijk", "triple-ijk", "sparse", "minplus"};

struct InputFlags {
  std::string path = "-";
  std::string format = "edgelist";
  std::optional<std::int64_t> max_weight;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", path, "graph file, '-' for standard input");
    cmd->add_option("-f,--format", format, "input format")
        ->check(CLI::IsMember({"edgelist", "matrix"}));
    cmd->add_option("--max-weight", max_weight,
                    "declared weight bound M; inferred from the input when absent")
        ->check(CLI::PositiveNumber);
  }

  loopswap::InputConfig resolve() const {
    return {path, *loopswap::parse_format_name(format), max_weight};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pivot-order experiments on all-pairs shortest paths"};
  app.require_subcommand(1);

  int code = 0;

  // compute
  auto* compute = app.add_subcommand("compute", "print one algorithm's distance matrix");
  InputFlags compute_in;
  compute_in.attach(compute);
  std::string compute_algo = "ijk";
  std::string compute_out = "-";
  unsigned compute_threads = 1;
  compute->add_option("-a,--algo", compute_algo, "algorithm")
      ->check(CLI::IsMember(kAlgoChoices));
  compute->add_option("-o,--output", compute_out, "output file, '-' for standard output");
  compute->add_option("-t,--threads", compute_threads, "worker threads for the sparse solver");
  compute->callback([&] {
    code = loopswap::cmd_compute(
        {compute_in.resolve(), to_algo(compute_algo), compute_out, compute_threads}, std::cout,
        std::cerr);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check algorithms on one graph");
  InputFlags verify_in;
  verify_in.attach(verify);
  std::vector<std::string> verify_algos;
  unsigned verify_threads = 1;
  verify->add_option("-a,--algos", verify_algos, "algorithms to compare (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgoChoices));
  verify->add_option("-t,--threads", verify_threads, "worker threads for the sparse solver");
  verify->callback([&] {
    code = loopswap::cmd_verify({verify_in.resolve(), to_algos(verify_algos), verify_threads},
                                std::cout, std::cerr);
  });

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "differential testing on random graphs");
  loopswap::FuzzConfig fuzz_cfg;
  std::string fuzz_n = "4..40";
  std::optional<std::string> fuzz_weights;
  bool fuzz_negative = false;
  std::string fuzz_negative_mode = "rejection";
  std::vector<std::string> fuzz_algos;
  fuzz->add_option("--trials", fuzz_cfg.trials, "number of random graphs");
  fuzz->add_option("--seed", fuzz_cfg.seed, "base seed; (seed, trial) reproduces a graph");
  fuzz->add_option("--n", fuzz_n, "vertex count range LO..HI");
  fuzz->add_option("--density", fuzz_cfg.spec.densities, "edge densities, one drawn per trial")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  fuzz->add_option("--weights", fuzz_weights,
                   "weight range LO..HI (default 0..20, or -1..40 with --negative-edges)");
  fuzz->add_flag("--negative-edges", fuzz_negative, "allow negative weights");
  fuzz->add_option("--negative-mode", fuzz_negative_mode,
                   "rejection: resample until cycle-free; potential: reweighted by vertex "
                   "potentials")
      ->check(CLI::IsMember({"rejection", "potential"}));
  fuzz->add_option("--max-attempts", fuzz_cfg.spec.max_attempts, "rejection sampling cap");
  fuzz->add_option("-a,--algos", fuzz_algos, "algorithms to compare (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgoChoices));
  fuzz->add_option("-t,--threads", fuzz_cfg.threads, "worker threads, 0 for all cores");
  fuzz->add_option("--reproducer-dir", fuzz_cfg.reproducer_dir,
                   "where a failing graph is written");
  fuzz->callback([&] {
    std::tie(fuzz_cfg.spec.n_min, fuzz_cfg.spec.n_max) = parse_range<std::size_t>(fuzz_n);
    const auto weights = fuzz_weights.value_or(fuzz_negative ? "-1..40" : "0..20");
    std::tie(fuzz_cfg.spec.weight_min, fuzz_cfg.spec.weight_max) =
        parse_range<std::int64_t>(weights);
    if (!fuzz_negative) {
      fuzz_cfg.spec.negatives = loopswap::NegativeWeights::kNone;
    } else if (fuzz_negative_mode == "potential") {
      fuzz_cfg.spec.negatives = loopswap::NegativeWeights::kPotential;
    } else {
      fuzz_cfg.spec.negatives = loopswap::NegativeWeights::kRejection;
    }
    fuzz_cfg.algos = to_algos(fuzz_algos);
    code = loopswap::cmd_fuzz(fuzz_cfg, std::cout, std::cerr);
  });

  // bench
  auto* bench = app.add_subcommand("bench", "time algorithms and emit CSV");
  loopswap::BenchConfig bench_cfg;
  bench->add_option("--sizes", bench_cfg.sizes, "vertex counts")->delimiter(',');
  bench->add_option("--reps", bench_cfg.reps, "timed repetitions after one warmup (>= 5)");
  bench->add_option("--seed", bench_cfg.seed, "graph generation seed");
  bench->add_option("-a,--algos", bench_cfg.algos,
                    "solvers, plus kernel-naive and kernel-blocked for the min-plus kernels")
      ->delimiter(',');
  bench->add_option("--regimes", bench_cfg.regimes, "sparse (m ~ 4n) and/or dense (m ~ n^2/2)")
      ->delimiter(',');
  bench->add_option("-o,--output", bench_cfg.output, "CSV file, '-' for standard output");
  bench->callback([&] { code = loopswap::cmd_bench(bench_cfg, std::cout, std::cerr); });

  // check-path
  auto* check = app.add_subcommand("check-path", "classify a path against the ijk order");
  loopswap::CheckPathConfig check_cfg;
  check->add_option("-p,--path", check_cfg.path, "1-based vertex ids, comma separated")
      ->delimiter(',')
      ->required();
  check->add_option("-n,--n", check_cfg.n, "vertex count (default: largest id)")
      ->check(CLI::PositiveNumber);
  check->callback([&] { code = loopswap::cmd_check_path(check_cfg, std::cout, std::cerr); });

  // validate
  auto* validate = app.add_subcommand("validate", "check a graph for negative cycles");
  InputFlags validate_in;
  validate_in.attach(validate);
  validate->callback(
      [&] { code = loopswap::cmd_validate({validate_in.resolve()}, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return loopswap::exit_code::kInputError;
  }
  return code;
}
