#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "loopswap/graph.hpp"
#include "loopswap/relaxation.hpp"

namespace loopswap {

using PathView = std::span<const Vertex>;

// A simple path p0..pk (k >= 0 edges) of pairwise distinct vertex ids.
// Predicates are combinatorial; weights are evaluated against a matrix.
class Path {
 public:
  // Throws std::invalid_argument if empty or if a vertex repeats.
  explicit Path(std::vector<Vertex> vertices);
  // Convenience for 1-based ids as written in text and on the command line.
  static Path from_one_based(std::span<const std::int64_t> ids);
  static Path from_one_based(std::initializer_list<std::int64_t> ids);

  std::size_t edge_count() const noexcept { return vertices_.size() - 1; }
  PathView vertices() const noexcept { return vertices_; }
  Vertex front() const noexcept { return vertices_.front(); }
  Vertex back() const noexcept { return vertices_.back(); }
  Path reversed() const;

  operator PathView() const noexcept { return vertices_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Single-vertex paths count as increasing, decreasing, valley and proper.
bool is_increasing(PathView p);
bool is_decreasing(PathView p);
// Every interior vertex is <= min(p0, pk).
bool is_valley(PathView p);
// No two consecutive vertices p_i, p_{i+1} with 1 <= i <= k-2 both above
// min(p0, pk). The last vertex before the head may sit above the minimum.
bool is_proper(PathView p);

// Closed-form test for whether the pivot-innermost order realizes p:
//   p0 < pk: some split x has p[0..x] proper, p[x..k] increasing, p_x >= p0;
//   p0 > pk: some split x has p[0..x] decreasing, p[x..k] proper, p_x >= pk.
// Paths with at most one edge are always realized.
bool is_realized_characterization(PathView p);

inline constexpr std::size_t kBruteForcePathCap = 12;

// Evaluates the recursive realization definition directly: p is realized by
// a sequence if it has at most one edge, or some position d holds
// (p0, pk, px) for an interior x and both halves are realized by the
// triples strictly before d. Memoized on (subpath, prefix length).
// Throws ResourceGuard for paths with more than max_vertices vertices.
bool is_realized_bruteforce(const Path& p, const RelaxSequence& seq,
                            std::size_t max_vertices = kBruteForcePathCap);

// Total weight of p under matrix m (finite cells are edges). Infinity if some
// step has no edge.
Weight path_weight(const DistMatrix& m, PathView p);

// Calls visit(path) for every simple path i -> j that uses only finite
// off-diagonal cells of m. For i == j visits the single-vertex path.
void for_each_simple_path(const DistMatrix& m, Vertex i, Vertex j,
                          const std::function<void(PathView)>& visit);

// Minimum weight over simple i -> j paths accepted by `accept`.
Weight min_simple_path_weight(const DistMatrix& m, Vertex i, Vertex j,
                              const std::function<bool(PathView)>& accept);

inline constexpr std::size_t kEnumerationVertexCap = 9;

// Minimum weight over simple i -> j paths in g that pass the characterization;
// 0 when i == j. Enumerates paths, so n is capped (ResourceGuard above it).
Weight oracle_min_realized(const Graph& g, Vertex i, Vertex j,
                           std::size_t max_vertices = kEnumerationVertexCap);

// The whole matrix of oracle_min_realized values.
DistMatrix oracle_min_realized_matrix(const Graph& g,
                                      std::size_t max_vertices = kEnumerationVertexCap);

}  // namespace loopswap
