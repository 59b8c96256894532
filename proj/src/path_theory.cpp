#include "loopswap/path_theory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace loopswap {

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("path must contain a vertex");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path is not simple: a vertex repeats");
  }
}

Path Path::from_one_based(std::span<const std::int64_t> ids) {
  std::vector<Vertex> vertices;
  vertices.reserve(ids.size());
  for (std::int64_t id : ids) {
    if (id < 1) throw std::invalid_argument("vertex ids are 1-based: " + std::to_string(id));
    vertices.push_back(static_cast<Vertex>(id - 1));
  }
  return Path(std::move(vertices));
}

Path Path::from_one_based(std::initializer_list<std::int64_t> ids) {
  return from_one_based(std::span<const std::int64_t>(ids.begin(), ids.size()));
}

Path Path::reversed() const {
  return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

bool is_increasing(PathView p) {
  return std::adjacent_find(p.begin(), p.end(), std::greater_equal<>()) == p.end();
}

bool is_decreasing(PathView p) {
  return std::adjacent_find(p.begin(), p.end(), std::less_equal<>()) == p.end();
}

bool is_valley(PathView p) {
  if (p.size() <= 2) return true;
  const Vertex low = std::min(p.front(), p.back());
  return std::all_of(p.begin() + 1, p.end() - 1, [low](Vertex v) { return v <= low; });
}

bool is_proper(PathView p) {
  const std::size_t k = p.size() - 1;
  if (k <= 1) return true;
  const Vertex low = std::min(p.front(), p.back());
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    if (p[i] > low && p[i + 1] > low) return false;
  }
  return true;
}

bool is_realized_characterization(PathView p) {
  const std::size_t k = p.size() - 1;
  if (k <= 1) return true;
  const Vertex first = p.front();
  const Vertex last = p.back();
  for (std::size_t x = 0; x <= k; ++x) {
    PathView head = p.first(x + 1);
    PathView tail = p.subspan(x);
    if (first < last) {
      if (p[x] >= first && is_proper(head) && is_increasing(tail)) return true;
    } else {
      if (p[x] >= last && is_decreasing(head) && is_proper(tail)) return true;
    }
  }
  return false;
}

namespace {

class RealizationSearch {
 public:
  RealizationSearch(PathView p, const RelaxSequence& seq) : p_(p), seq_(seq) {}

  // Is p[s..e] realized by the first `limit` triples?
  bool realized(std::size_t s, std::size_t e, std::size_t limit) {
    if (e - s <= 1) return true;
    auto key = std::make_tuple(s, e, limit);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (std::size_t x = s + 1; x < e && !result; ++x) {
      // Realization is monotone in the prefix length, so the latest
      // occurrence of (ps, pe, px) before the limit dominates every other.
      auto d = seq_.last_position_before(Triple{p_[s], p_[e], p_[x]}, limit);
      if (!d) continue;
      result = realized(s, x, *d) && realized(x, e, *d);
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  PathView p_;
  const RelaxSequence& seq_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> memo_;
};

}  // namespace

bool is_realized_bruteforce(const Path& p, const RelaxSequence& seq, std::size_t max_vertices) {
  PathView view = p.vertices();
  if (view.size() > max_vertices) {
    throw ResourceGuard("brute-force realization refuses paths with more than " +
                        std::to_string(max_vertices) + " vertices");
  }
  RealizationSearch search(view, seq);
  return search.realized(0, view.size() - 1, seq.size());
}

Weight path_weight(const DistMatrix& m, PathView p) {
  Weight total(0);
  for (std::size_t t = 0; t + 1 < p.size(); ++t) {
    total = total + m(p[t], p[t + 1]);
    if (total.is_infinite()) break;
  }
  return total;
}

namespace {

void extend(const DistMatrix& m, Vertex target, std::vector<Vertex>& stack,
            std::vector<bool>& used, const std::function<void(PathView)>& visit) {
  const Vertex at = stack.back();
  if (at == target) {
    visit(stack);
    return;
  }
  for (Vertex next = 0; next < m.size(); ++next) {
    if (used[next] || next == at || m(at, next).is_infinite()) continue;
    used[next] = true;
    stack.push_back(next);
    extend(m, target, stack, used, visit);
    stack.pop_back();
    used[next] = false;
  }
}

}  // namespace

void for_each_simple_path(const DistMatrix& m, Vertex i, Vertex j,
                          const std::function<void(PathView)>& visit) {
  std::vector<Vertex> stack{i};
  std::vector<bool> used(m.size(), false);
  used[i] = true;
  extend(m, j, stack, used, visit);
}

Weight min_simple_path_weight(const DistMatrix& m, Vertex i, Vertex j,
                              const std::function<bool(PathView)>& accept) {
  Weight best = kInfinity;
  for_each_simple_path(m, i, j, [&](PathView p) {
    if (accept(p)) best = std::min(best, path_weight(m, p));
  });
  return best;
}

namespace {

void guard_enumeration(const Graph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw ResourceGuard("path enumeration refuses graphs with more than " +
                        std::to_string(max_vertices) + " vertices");
  }
}

}  // namespace

Weight oracle_min_realized(const Graph& g, Vertex i, Vertex j, std::size_t max_vertices) {
  guard_enumeration(g, max_vertices);
  if (i == j) return Weight(0);
  return min_simple_path_weight(adjacency_matrix(g), i, j, is_realized_characterization);
}

DistMatrix oracle_min_realized_matrix(const Graph& g, std::size_t max_vertices) {
  guard_enumeration(g, max_vertices);
  const DistMatrix a = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  DistMatrix out = DistMatrix::identity(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j) out(i, j) = min_simple_path_weight(a, i, j, is_realized_characterization);
    }
  }
  return out;
}

}  // namespace loopswap
