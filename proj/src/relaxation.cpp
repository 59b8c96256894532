#include "loopswap/relaxation.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopswap {

namespace {

// A[i][j] = min(A[i][j], A[i][k] + A[k][j]), skipping infinite operands.
inline void relax(DistMatrix& a, Vertex i, Vertex j, Vertex k) {
  const Weight ik = a(i, k);
  if (ik.is_infinite()) return;
  const Weight kj = a(k, j);
  if (kj.is_infinite()) return;
  const Weight through = ik + kj;
  if (through < a(i, j)) a(i, j) = through;
}

}  // namespace

RelaxSequence RelaxSequence::kij(std::size_t n, std::size_t repeats) {
  return RelaxSequence(Order::kKij, n, n * n * n * repeats);
}

RelaxSequence RelaxSequence::ijk(std::size_t n, std::size_t repeats) {
  return RelaxSequence(Order::kIjk, n, n * n * n * repeats);
}

RelaxSequence RelaxSequence::from_triples(std::size_t n, std::vector<Triple> triples) {
  for (const Triple& t : triples) {
    if (t.i >= n || t.j >= n || t.k >= n) {
      throw std::invalid_argument("relaxation triple component out of range");
    }
  }
  RelaxSequence seq(Order::kExplicit, n, triples.size());
  seq.index_.reserve(triples.size());
  for (std::size_t p = 0; p < triples.size(); ++p) seq.index_.emplace_back(triples[p], p);
  std::sort(seq.index_.begin(), seq.index_.end());
  seq.triples_ = std::move(triples);
  return seq;
}

Triple RelaxSequence::operator[](std::size_t pos) const {
  if (order_ == Order::kExplicit) return triples_[pos];
  const std::size_t n = n_;
  const std::size_t c = pos % n;
  const std::size_t b = (pos / n) % n;
  const std::size_t a = (pos / (n * n)) % n;
  return order_ == Order::kKij ? Triple{b, c, a} : Triple{a, b, c};
}

RelaxSequence RelaxSequence::prefix(std::size_t length) const {
  RelaxSequence copy = *this;
  copy.length_ = std::min(length, length_);
  return copy;
}

std::optional<std::size_t> RelaxSequence::last_position_before(const Triple& t,
                                                               std::size_t limit) const {
  limit = std::min(limit, length_);
  if (limit == 0) return std::nullopt;
  if (order_ == Order::kExplicit) {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair{t, limit});
    if (it == index_.begin()) return std::nullopt;
    --it;
    if (it->first != t) return std::nullopt;
    return it->second;
  }
  if (t.i >= n_ || t.j >= n_ || t.k >= n_) return std::nullopt;
  const std::size_t n = n_;
  const std::size_t period = n * n * n;
  const std::size_t offset = order_ == Order::kKij ? t.k * n * n + t.i * n + t.j
                                                   : t.i * n * n + t.j * n + t.k;
  // Occurrences are offset, offset + period, offset + 2 * period, ...
  if (offset >= limit) return std::nullopt;
  return offset + (limit - 1 - offset) / period * period;
}

DistMatrix run_relaxation(const DistMatrix& a, const RelaxSequence& seq) {
  if (seq.vertex_count() != a.size()) {
    throw std::invalid_argument("relaxation sequence and matrix dimensions differ");
  }
  DistMatrix out = a;
  seq.for_each([&out](const Triple& t) { relax(out, t.i, t.j, t.k); });
  return out;
}

DistMatrix apsp_kij(const DistMatrix& a) {
  DistMatrix m = a;
  const std::size_t n = m.size();
  for (Vertex k = 0; k < n; ++k) {
    const auto pivot_row = m.row(k);
    for (Vertex i = 0; i < n; ++i) {
      const Weight ik = m(i, k);
      if (ik.is_infinite()) continue;
      auto row = m.row(i);
      for (Vertex j = 0; j < n; ++j) {
        const Weight kj = pivot_row[j];
        if (kj.is_infinite()) continue;
        const Weight through = ik + kj;
        if (through < row[j]) row[j] = through;
      }
    }
  }
  return m;
}

DistMatrix incorrect_apsp_ijk(const DistMatrix& a) {
  DistMatrix m = a;
  const std::size_t n = m.size();
  for (Vertex i = 0; i < n; ++i) {
    auto row = m.row(i);
    for (Vertex j = 0; j < n; ++j) {
      Weight best = row[j];
      for (Vertex k = 0; k < n; ++k) {
        // row[j] may change while k runs (k == j reads A[i][j] itself), so
        // commit after every step to keep the exact relaxation order.
        const Weight ik = row[k];
        if (ik.is_infinite()) continue;
        const Weight kj = m(k, j);
        if (kj.is_infinite()) continue;
        const Weight through = ik + kj;
        if (through < best) {
          best = through;
          row[j] = best;
        }
      }
    }
  }
  return m;
}

DistMatrix triple_ijk(const DistMatrix& a) {
  return incorrect_apsp_ijk(incorrect_apsp_ijk(incorrect_apsp_ijk(a)));
}

}  // namespace loopswap
