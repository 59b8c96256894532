#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopswap/graph.hpp"
#include "loopswap/io.hpp"
#include "loopswap/random_graph.hpp"

namespace loopswap {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;
inline constexpr int kNegativeCycle = 3;
inline constexpr int kGenerationExhausted = 4;
}  // namespace exit_code

enum class Algo { kKij, kIjk, kTripleIjk, kSparse, kMinplus };

std::string_view algo_name(Algo algo);
std::optional<Algo> parse_algo(std::string_view name);
std::vector<Algo> all_algos();

DistMatrix run_algo(Algo algo, const Graph& g, unsigned threads = 1);

// Solvers in one family must agree cell for cell: kij and triple-ijk compute
// true distances, ijk, sparse and minplus compute the pivot-innermost matrix.
enum class Family { kTrueDistances, kPivotInnermost };

struct Solver {
  std::string name;
  Family family;
  std::function<DistMatrix(const Graph&)> run;
};

Family algo_family(Algo algo);
std::vector<Solver> make_solvers(std::span<const Algo> algos, unsigned threads = 1);

struct Mismatch {
  Vertex i = 0;
  Vertex j = 0;
  Family family = Family::kPivotInnermost;
  std::vector<std::pair<std::string, Weight>> values;
};

// First cell (row-major, family by family) where solvers of one family differ.
std::optional<Mismatch> verify_graph(const Graph& g, std::span<const Solver> solvers);
std::string describe(const Mismatch& m);

struct InputConfig {
  std::string path = "-";  // "-" reads standard input
  GraphFormat format = GraphFormat::kEdgeList;
  std::optional<std::int64_t> weight_bound;
};

struct ComputeConfig {
  InputConfig input;
  Algo algo = Algo::kIjk;
  std::string output = "-";
  unsigned threads = 1;
};

struct VerifyConfig {
  InputConfig input;
  std::vector<Algo> algos = all_algos();
  unsigned threads = 1;
};

struct FuzzConfig {
  RandomGraphSpec spec;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::vector<Algo> algos = all_algos();
  std::vector<Solver> extra_solvers;  // appended to the ones built from algos
  std::string reproducer_dir = ".";
};

struct BenchConfig {
  std::vector<std::size_t> sizes{64, 128, 256};
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  // Solver names plus "kernel-naive" / "kernel-blocked" for the bare
  // min-plus kernels on dense random matrices.
  std::vector<std::string> algos{"kij", "ijk", "sparse", "minplus"};
  std::vector<std::string> regimes{"sparse", "dense"};
  std::string output = "-";
};

struct CheckPathConfig {
  std::vector<std::int64_t> path;  // 1-based ids
  std::optional<std::size_t> n;    // defaults to the largest id
};

struct ValidateConfig {
  InputConfig input;
};

// Commands write results to `out` and diagnostics to `err`; the return value
// is the process exit code.
int cmd_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const Graph& g, std::span<const Solver> solvers, std::ostream& out,
               std::ostream& err);
int cmd_fuzz(const FuzzConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_path(const CheckPathConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace loopswap
