#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "loopswap/weight.hpp"

namespace loopswap {

// Vertices are 0-based inside the library. The integer order of ids is the
// loop iteration order of the relaxation algorithms, so it carries meaning.
// Text formats and the CLI use 1-based ids; conversion happens only in io.
using Vertex = std::size_t;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed weighted graph over vertices [0, n).
//
// Construction normalizes the edge list: non-negative self-loops are dropped,
// negative self-loops are rejected as negative cycles, parallel edges collapse
// to their minimum weight, and edges end up sorted by (from, to). The weight
// bound M is either declared or inferred as the largest |w|; the constructor
// rejects graphs where (n + 1) * M would exceed kWeightMax.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges,
        std::optional<std::int64_t> declared_bound = std::nullopt);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::int64_t weight_bound() const noexcept { return bound_; }
  bool has_negative_edge() const noexcept { return has_negative_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  // Edges leaving v, sorted by head.
  std::span<const Edge> out_edges(Vertex v) const;
  // Edges entering v, sorted by tail.
  std::span<const Edge> in_edges(Vertex v) const;

  std::optional<Weight> edge_weight(Vertex from, Vertex to) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::int64_t bound_ = 0;
  bool has_negative_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Edge> in_edges_;
  std::vector<std::size_t> in_offsets_;
};

// Dense n x n matrix of weights, row-major. Used both as an adjacency matrix
// and as an algorithm result. Most algorithms require a zero diagonal; the
// type itself does not enforce it because masked operands are legitimate.
class DistMatrix {
 public:
  DistMatrix() = default;
  explicit DistMatrix(std::size_t n, Weight fill = kInfinity)
      : n_(n), cells_(n * n, fill) {}

  // Zero diagonal, infinity elsewhere: the two-sided min-plus identity.
  static DistMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Weight& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * n_ + j]; }
  Weight operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j]; }

  std::span<Weight> row(std::size_t i) noexcept { return {cells_.data() + i * n_, n_}; }
  std::span<const Weight> row(std::size_t i) const noexcept {
    return {cells_.data() + i * n_, n_};
  }

  bool has_zero_diagonal() const noexcept;
  DistMatrix transposed() const;

  friend bool operator==(const DistMatrix&, const DistMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> cells_;
};

// 0 on the diagonal, w(i, j) where an edge exists, infinity elsewhere.
DistMatrix adjacency_matrix(const Graph& g);

// Every edge (u, v, w) becomes (v, u, w).
Graph reverse_graph(const Graph& g);

// Bellman-Ford from a virtual source joined to every vertex with weight 0.
bool validate_no_negative_cycle(const Graph& g);

// Same check, throwing NegativeCycleError on failure.
void require_no_negative_cycle(const Graph& g);

}  // namespace loopswap
