#include "hpnet/interval.hpp"

namespace hpnet {

std::string TimeInterval::to_string() const {
  std::string s = "[" + std::to_string(lo) + ",";
  s += bounded() ? std::to_string(hi) : std::string("inf");
  s += "]";
  return s;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a == TimeInterval::kUnbounded || b == TimeInterval::kUnbounded)
    return TimeInterval::kUnbounded;
  if (a > TimeInterval::kUnbounded - b) return TimeInterval::kUnbounded;
  return a + b;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t k) {
  if (k == 0 || a == 0) return 0;
  if (a == TimeInterval::kUnbounded) return TimeInterval::kUnbounded;
  if (a > TimeInterval::kUnbounded / k) return TimeInterval::kUnbounded;
  return a * k;
}

TimeInterval interval_add(const TimeInterval& a, const TimeInterval& b) {
  return {a.lo + b.lo, sat_add(a.hi, b.hi)};
}

TimeInterval interval_max(const TimeInterval& a, const TimeInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

TimeInterval interval_scale(const TimeInterval& a, std::int64_t k) {
  return {a.lo * k, sat_mul(a.hi, k)};
}

}  // namespace hpnet
