#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

namespace hpnet {

/// Closed integer time interval [lo, hi]. An upper bound of kUnbounded
/// stands for "no upper bound" and absorbs arithmetic. Intervals carry
/// place/transition firing windows as well as the TEB/TEC values of the
/// pattern calculus.
struct TimeInterval {
  static constexpr std::int64_t kUnbounded =
      std::numeric_limits<std::int64_t>::max();

  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static TimeInterval point(std::int64_t v) { return {v, v}; }
  static TimeInterval at_least(std::int64_t l) { return {l, kUnbounded}; }

  bool bounded() const { return hi != kUnbounded; }
  bool valid() const { return lo >= 0 && lo <= hi; }
  bool contains(std::int64_t t) const { return t >= lo && t <= hi; }

  bool operator==(const TimeInterval& o) const = default;

  std::string to_string() const;
};

/// Addition that saturates at kUnbounded.
std::int64_t sat_add(std::int64_t a, std::int64_t b);

/// Multiplication by a non-negative scalar, saturating at kUnbounded.
std::int64_t sat_mul(std::int64_t a, std::int64_t k);

/// Componentwise interval sum; unbounded upper bounds absorb.
TimeInterval interval_add(const TimeInterval& a, const TimeInterval& b);

/// Componentwise max; unbounded dominates. Identity is [0,0].
TimeInterval interval_max(const TimeInterval& a, const TimeInterval& b);

/// k-fold sum of an interval with itself (k >= 0).
TimeInterval interval_scale(const TimeInterval& a, std::int64_t k);

}  // namespace hpnet
