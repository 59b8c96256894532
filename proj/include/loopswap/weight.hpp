#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "loopswap/errors.hpp"

namespace loopswap {

// Largest finite magnitude. Graph ingest guarantees (n + 1) * M <= kWeightMax,
// so no simple-path sum plus one relaxation can leave the finite range.
inline constexpr std::int64_t kWeightMax = (std::int64_t{1} << 62) - 1;

// Extended integer: a finite value in [-kWeightMax, kWeightMax] or +infinity.
// Infinity is absorbing under addition and compares above every finite value.
class Weight {
 public:
  constexpr Weight() noexcept = default;

  constexpr explicit Weight(std::int64_t value) : raw_(value) {
    if (value > kWeightMax || value < -kWeightMax) {
      throw ArithmeticOverflow("weight " + std::to_string(value) +
                               " outside the finite range");
    }
  }

  static constexpr Weight infinity() noexcept {
    Weight w;
    w.raw_ = kInfinityRaw;
    return w;
  }

  constexpr bool is_finite() const noexcept { return raw_ != kInfinityRaw; }
  constexpr bool is_infinite() const noexcept { return raw_ == kInfinityRaw; }

  // Precondition: is_finite().
  constexpr std::int64_t value() const noexcept { return raw_; }

  friend constexpr bool operator==(Weight, Weight) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) noexcept {
    return a.raw_ <=> b.raw_;
  }

  std::string to_string() const;

 private:
  static constexpr std::int64_t kInfinityRaw = std::numeric_limits<std::int64_t>::max();

  std::int64_t raw_ = 0;
};

inline constexpr Weight kInfinity = Weight::infinity();

// Infinity if either operand is infinite, the exact sum otherwise.
// Throws ArithmeticOverflow when the sum leaves the finite range.
constexpr Weight weight_add(Weight a, Weight b) {
  if (a.is_infinite() || b.is_infinite()) return kInfinity;
  // |a|, |b| <= 2^62 - 1, so the int64 sum itself cannot wrap.
  return Weight(a.value() + b.value());
}

constexpr Weight operator+(Weight a, Weight b) { return weight_add(a, b); }

std::ostream& operator<<(std::ostream& os, Weight w);

}  // namespace loopswap
