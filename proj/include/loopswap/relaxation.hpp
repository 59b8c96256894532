#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "loopswap/graph.hpp"

namespace loopswap {

// One relaxation step: A[i][j] = min(A[i][j], A[i][k] + A[k][j]).
struct Triple {
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// An ordered list of relaxation triples over vertices [0, n).
//
// The canonical orders are generated arithmetically and never materialized:
//   kij: position a*n^2 + b*n + c holds (b, c, a)   (pivot outermost)
//   ijk: position a*n^2 + b*n + c holds (a, b, c)   (pivot innermost)
// A canonical order may be repeated back to back, and any sequence may be
// truncated to a prefix.
class RelaxSequence {
 public:
  enum class Order { kKij, kIjk, kExplicit };

  static RelaxSequence kij(std::size_t n, std::size_t repeats = 1);
  static RelaxSequence ijk(std::size_t n, std::size_t repeats = 1);
  // Throws std::invalid_argument if a component is outside [0, n).
  static RelaxSequence from_triples(std::size_t n, std::vector<Triple> triples);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  Order order() const noexcept { return order_; }

  Triple operator[](std::size_t pos) const;

  // The first `length` triples (clamped to size()).
  RelaxSequence prefix(std::size_t length) const;

  // Largest position p < limit with (*this)[p] == t, if any. O(1) for the
  // canonical orders, O(log size) for explicit lists.
  std::optional<std::size_t> last_position_before(const Triple& t, std::size_t limit) const;

  template <typename F>
  void for_each(F&& visit) const {
    if (order_ == Order::kExplicit) {
      for (std::size_t p = 0; p < length_; ++p) visit(triples_[p]);
      return;
    }
    const std::size_t n = n_;
    std::size_t remaining = length_;
    while (remaining > 0) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          for (Vertex c = 0; c < n; ++c) {
            if (remaining == 0) return;
            --remaining;
            visit(order_ == Order::kKij ? Triple{b, c, a} : Triple{a, b, c});
          }
        }
      }
    }
  }

 private:
  RelaxSequence(Order order, std::size_t n, std::size_t length)
      : order_(order), n_(n), length_(length) {}

  Order order_;
  std::size_t n_;
  std::size_t length_;
  std::vector<Triple> triples_;
  // Explicit lists: (triple, position) sorted, for last_position_before.
  std::vector<std::pair<Triple, std::size_t>> index_;
};

// Applies every triple of `seq` in order to a copy of `a`.
// Precondition: seq.vertex_count() == a.size().
DistMatrix run_relaxation(const DistMatrix& a, const RelaxSequence& seq);

// Floyd-Warshall with the pivot loop outermost: the true APSP distances.
DistMatrix apsp_kij(const DistMatrix& a);

// The loop-order-swapped variant (pivot innermost). Its output is the
// reference the sparse and min-plus solvers must reproduce exactly.
DistMatrix incorrect_apsp_ijk(const DistMatrix& a);

// incorrect_apsp_ijk applied three times, output fed back as input. Always
// exactly three passes.
DistMatrix triple_ijk(const DistMatrix& a);

}  // namespace loopswap
