#include "loopswap/graph.hpp"

#include <algorithm>
#include <string>

namespace loopswap {

namespace {

std::int64_t magnitude(Weight w) { return w.value() < 0 ? -w.value() : w.value(); }

std::vector<std::size_t> bucket_offsets(std::size_t n, std::span<const Edge> edges,
                                        Vertex Edge::*key) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const Edge& e : edges) ++offsets[e.*key + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  return offsets;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::int64_t> declared_bound)
    : n_(n) {
  if (n == 0) throw InvalidGraph("graph must have at least one vertex");
  if (declared_bound && *declared_bound < 0) {
    throw InvalidGraph("weight bound must be non-negative");
  }

  std::int64_t observed = 0;
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw InvalidGraph("edge endpoint out of range [1, " + std::to_string(n) + "]");
    }
    if (e.weight.is_infinite()) throw InvalidGraph("edge weight must be finite");
    if (declared_bound && magnitude(e.weight) > *declared_bound) {
      throw InvalidGraph("edge weight " + e.weight.to_string() + " exceeds declared bound " +
                         std::to_string(*declared_bound));
    }
    observed = std::max(observed, magnitude(e.weight));
    if (e.from == e.to) {
      if (e.weight.value() < 0) {
        throw NegativeCycleError("negative self-loop at vertex " + std::to_string(e.from + 1));
      }
      continue;
    }
    kept.push_back(e);
  }
  bound_ = declared_bound.value_or(observed);

  // (n + 1) * M <= kWeightMax, written to avoid the multiplication overflowing.
  if (bound_ > 0 && static_cast<std::uint64_t>(n) + 1 >
                        static_cast<std::uint64_t>(kWeightMax / bound_)) {
    throw InvalidGraph("weight bound " + std::to_string(bound_) + " too large for " +
                       std::to_string(n) + " vertices");
  }

  std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.weight < b.weight;
  });
  // After the sort the first edge of each (from, to) run is the minimum.
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Edge& a, const Edge& b) {
                           return a.from == b.from && a.to == b.to;
                         }),
             kept.end());
  edges_ = std::move(kept);
  has_negative_ = std::any_of(edges_.begin(), edges_.end(),
                              [](const Edge& e) { return e.weight.value() < 0; });

  out_offsets_ = bucket_offsets(n_, edges_, &Edge::from);
  in_edges_ = edges_;
  std::stable_sort(in_edges_.begin(), in_edges_.end(),
                   [](const Edge& a, const Edge& b) { return a.to < b.to; });
  in_offsets_ = bucket_offsets(n_, in_edges_, &Edge::to);
}

std::span<const Edge> Graph::out_edges(Vertex v) const {
  return std::span<const Edge>(edges_).subspan(out_offsets_[v],
                                               out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const Edge> Graph::in_edges(Vertex v) const {
  return std::span<const Edge>(in_edges_).subspan(in_offsets_[v],
                                                  in_offsets_[v + 1] - in_offsets_[v]);
}

std::optional<Weight> Graph::edge_weight(Vertex from, Vertex to) const {
  auto out = out_edges(from);
  auto it = std::lower_bound(out.begin(), out.end(), to,
                             [](const Edge& e, Vertex v) { return e.to < v; });
  if (it == out.end() || it->to != to) return std::nullopt;
  return it->weight;
}

DistMatrix DistMatrix::identity(std::size_t n) {
  DistMatrix m(n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Weight(0);
  return m;
}

bool DistMatrix::has_zero_diagonal() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != Weight(0)) return false;
  }
  return true;
}

DistMatrix DistMatrix::transposed() const {
  DistMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

DistMatrix adjacency_matrix(const Graph& g) {
  DistMatrix a = DistMatrix::identity(g.vertex_count());
  for (const Edge& e : g.edges()) a(e.from, e.to) = e.weight;
  return a;
}

Graph reverse_graph(const Graph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.edge_count());
  for (const Edge& e : g.edges()) flipped.push_back({e.to, e.from, e.weight});
  return Graph(g.vertex_count(), std::move(flipped), g.weight_bound());
}

bool validate_no_negative_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Virtual source at distance 0 to every vertex: start all distances at 0.
  std::vector<Weight> dist(n, Weight(0));
  // n + 1 vertices in the augmented graph, so n passes reach the fixpoint.
  for (std::size_t pass = 0; pass <= n; ++pass) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      // Without a negative cycle every distance stays >= -(n - 1) * M, so an
      // overflow can only come from a cycle driving distances down.
      Weight candidate;
      try {
        candidate = dist[e.from] + e.weight;
      } catch (const ArithmeticOverflow&) {
        return false;
      }
      if (candidate < dist[e.to]) {
        dist[e.to] = candidate;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

void require_no_negative_cycle(const Graph& g) {
  if (!validate_no_negative_cycle(g)) {
    throw NegativeCycleError("graph contains a negative cycle");
  }
}

}  // namespace loopswap
