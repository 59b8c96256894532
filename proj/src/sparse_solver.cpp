#include "loopswap/sparse_solver.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>
#include <utility>

namespace loopswap {

namespace {

bool keep_all(const Edge&) { return true; }

template <typename Keep>
std::vector<Weight> dijkstra(const Graph& g, Vertex source, Keep keep) {
  std::vector<Weight> dist(g.vertex_count(), kInfinity);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = Weight(0);
  heap.emplace(Weight(0), source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const Edge& e : g.out_edges(u)) {
      if (!keep(e)) continue;
      Weight candidate = d + e.weight;
      if (candidate < dist[e.to]) {
        dist[e.to] = candidate;
        heap.emplace(candidate, e.to);
      }
    }
  }
  return dist;
}

template <typename Keep>
std::vector<Weight> bellman_ford(const Graph& g, Vertex source, Keep keep) {
  const std::size_t n = g.vertex_count();
  std::vector<Weight> dist(n, kInfinity);
  dist[source] = Weight(0);
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (dist[e.from].is_infinite() || !keep(e)) continue;
      Weight candidate = dist[e.from] + e.weight;
      if (candidate < dist[e.to]) {
        dist[e.to] = candidate;
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  // n passes all changed something: pass n decides.
  for (const Edge& e : g.edges()) {
    if (dist[e.from].is_infinite() || !keep(e)) continue;
    if (dist[e.from] + e.weight < dist[e.to]) {
      throw ContractViolation("sssp: negative cycle reachable from vertex " +
                              std::to_string(source + 1));
    }
  }
  return dist;
}

template <typename Keep>
std::vector<Weight> run_engine(const Graph& g, Vertex source, SsspEngine engine, Keep keep) {
  if (engine == SsspEngine::kAuto) {
    engine = g.has_negative_edge() ? SsspEngine::kBellmanFord : SsspEngine::kDijkstra;
  }
  if (engine == SsspEngine::kDijkstra && g.has_negative_edge()) {
    throw std::invalid_argument("sssp: Dijkstra requires non-negative edge weights");
  }
  return engine == SsspEngine::kDijkstra ? dijkstra(g, source, keep)
                                         : bellman_ford(g, source, keep);
}

}  // namespace

SsspResult sssp(const Graph& g, Vertex source, SsspEngine engine) {
  if (source >= g.vertex_count()) throw std::out_of_range("sssp: source out of range");
  return {source, run_engine(g, source, engine, keep_all)};
}

Graph restricted_graph(const Graph& g, Vertex i) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.from <= i || e.to <= i) kept.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(kept), g.weight_bound());
}

std::vector<Weight> solve_row_block(const Graph& g, Vertex i, const SparseOptions& options,
                                    SparseStats* stats) {
  const std::size_t n = g.vertex_count();
  if (i >= n) throw std::out_of_range("solve_row_block: source out of range");

  // Same edge set as restricted_graph(g, i), filtered in place. The engine is
  // chosen from g, so every row uses the same one.
  const std::vector<Weight> proper_except_last = run_engine(
      g, i, options.engine, [i](const Edge& e) { return e.from <= i || e.to <= i; });
  if (stats != nullptr) ++stats->sssp_calls;

  std::vector<Weight> proper = proper_except_last;
  for (const Edge& e : g.edges()) {
    if (proper_except_last[e.from].is_infinite()) continue;
    proper[e.to] = std::min(proper[e.to], proper_except_last[e.from] + e.weight);
  }

  std::vector<Weight> row(n - i);
  for (Vertex j = i; j < n; ++j) {
    Weight best = proper[j];
    for (const Edge& e : g.in_edges(j)) {
      if (e.from < i || e.from >= j) continue;
      const Weight prefix = row[e.from - i];
      if (prefix.is_infinite()) continue;
      best = std::min(best, prefix + e.weight);
    }
    row[j - i] = best;
  }
  return row;
}

DistMatrix incorrect_apsp_sparse(const Graph& g, const SparseOptions& options,
                                 SparseStats* stats) {
  const std::size_t n = g.vertex_count();
  const Graph reversed = reverse_graph(g);
  DistMatrix out(n);

  // Task t < n fills row t from column t on; task n + t fills column t from
  // row t on. Each cell (i, j) is written by exactly one task.
  auto run_task = [&](std::size_t task) {
    if (task < n) {
      auto row = solve_row_block(g, task, options, stats);
      for (Vertex j = task; j < n; ++j) out(task, j) = row[j - task];
    } else {
      const Vertex j = task - n;
      auto column = solve_row_block(reversed, j, options, stats);
      for (Vertex i = j + 1; i < n; ++i) out(i, j) = column[i - j];
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(2 * n)));
  if (threads == 1) {
    for (std::size_t task = 0; task < 2 * n; ++task) run_task(task);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t task = next++; task < 2 * n; task = next++) {
          try {
            run_task(task);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace loopswap
