#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>

namespace ph {

using u128 = unsigned __int128;

// Escalation tier: 256-bit binary mantissa, which leaves >= 128 fractional
// bits for every magnitude this library produces (values stay below 2^128).
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

enum class EvalMode { fast, escalated };

inline const char* to_string(EvalMode m) {
  return m == EvalMode::fast ? "fast" : "escalated";
}

// Default relative margin below which a fast-path comparison is re-evaluated
// at high precision.
inline constexpr double kDefaultEscalationThreshold = 1e-9;

// Relative tie band for the escalated tier itself. Anything closer than this
// after a 256-bit recomputation is reported as an exact tie (sign 0).
inline const BigFloat& big_tie_epsilon() {
  static const BigFloat eps = []() {
    BigFloat e(1);
    e = ldexp(e, -200);
    return e;
  }();
  return eps;
}

inline int big_sign(const BigFloat& lhs, const BigFloat& rhs) {
  using std::abs;
  const BigFloat diff = lhs - rhs;
  const BigFloat scale = (std::max)(abs(lhs), abs(rhs));
  if (abs(diff) <= big_tie_epsilon() * scale) return 0;
  return diff < 0 ? -1 : 1;
}

// True when two fast-path values agree to within `threshold` relative.
inline bool needs_escalation(double lhs, double rhs, double threshold) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return std::abs(lhs - rhs) <= threshold * scale;
}

// Log-domain variant: log a and log b agree within `threshold` absolute iff
// a and b agree within ~threshold relative. Slightly widened so the linear
// rule is always covered.
inline bool needs_escalation_log(double log_lhs, double log_rhs,
                                 double threshold) {
  return std::abs(log_lhs - log_rhs) <= threshold * 1.0625 + 4e-14;
}

// Compare lhs to rhs; when the relative margin is inside `threshold`, defer
// to the supplied high-precision recomputations. Returns the sign of
// (lhs - rhs) and reports which tier decided.
template <class HiLhs, class HiRhs>
int compare_escalated(double lhs, double rhs, double threshold, HiLhs&& hi_lhs,
                      HiRhs&& hi_rhs, EvalMode* mode) {
  if (!needs_escalation(lhs, rhs, threshold)) {
    *mode = EvalMode::fast;
    return lhs < rhs ? -1 : 1;
  }
  *mode = EvalMode::escalated;
  return big_sign(hi_lhs(), hi_rhs());
}

inline BigFloat big_from_u128(u128 v) {
  return BigFloat(v);
}

// Exact ratio num/den at escalation precision.
inline BigFloat big_ratio(u128 num, u128 den) {
  return big_from_u128(num) / big_from_u128(den);
}

}  // namespace ph
