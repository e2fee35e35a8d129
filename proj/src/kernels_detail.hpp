#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

// Shared reduction constants and the scalar reference algorithm.
//
// log: write x = 2^k * m with m in [sqrt(2)/2, sqrt(2)), then evaluate the
// classical atanh-series correction R(s), s = f/(2+f), f = m-1, with the
// split ln2 to keep the k*ln2 term exact to well under an ulp.
//
// exp: reduce x = k*ln2 + r with |r| <= ln2/2, evaluate the standard degree-5
// correction polynomial, reconstruct by direct exponent-field adjustment.
//
// Coefficients are the widely used fdlibm minimax sets. Both routines stay
// within ~1 ulp across the library's input domain; the escalation tier covers
// any comparison whose margin is small enough for that to matter.
//
// These functions must stay branch-free in their arithmetic (selects are
// fine) and free of fused multiply-adds: the AVX2 backend mirrors this exact
// operation order, and the bit-for-bit equivalence test in test_kernels
// depends on it. Compile the kernel translation units with -ffp-contract=off.

namespace ph::kernels::detail {

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kInvLn2 = 1.44269504088896338700e+00;
inline constexpr double kSqrt2 = 1.41421356237309514547e+00;

inline constexpr double kLg1 = 6.666666666666735130e-01;
inline constexpr double kLg2 = 3.999999999940941908e-01;
inline constexpr double kLg3 = 2.857142874366239149e-01;
inline constexpr double kLg4 = 2.222219843214978396e-01;
inline constexpr double kLg5 = 1.818357216161805012e-01;
inline constexpr double kLg6 = 1.531383769920937332e-01;
inline constexpr double kLg7 = 1.479819860511658591e-01;

inline constexpr double kP1 = 1.66666666666666019037e-01;
inline constexpr double kP2 = -2.77777777770155933842e-03;
inline constexpr double kP3 = 6.61375632143793436117e-05;
inline constexpr double kP4 = -1.65339022054652515390e-06;
inline constexpr double kP5 = 4.13813679705723846039e-08;

inline double log_core(double x) {
  const std::uint64_t u = std::bit_cast<std::uint64_t>(x);
  const std::uint64_t biased = u >> 52;
  double m = std::bit_cast<double>((u & 0x000fffffffffffffULL) |
                                   0x3ff0000000000000ULL);  // [1, 2)
  const bool halve = m > kSqrt2;
  m = halve ? m * 0.5 : m;
  const double k =
      (static_cast<double>(biased) - 1023.0) + (halve ? 1.0 : 0.0);

  const double f = m - 1.0;
  const double s = f / (2.0 + f);
  const double z = s * s;
  const double w = z * z;
  const double t1 = w * (kLg2 + w * (kLg4 + w * kLg6));
  const double t2 = z * (kLg1 + w * (kLg3 + w * (kLg5 + w * kLg7)));
  const double r = t2 + t1;
  const double hfsq = 0.5 * f * f;
  return k * kLn2Hi - ((hfsq - (s * (hfsq + r) + k * kLn2Lo)) - f);
}

inline double exp_core(double x) {
  const double kd = std::nearbyint(x * kInvLn2);
  const double hi = x - kd * kLn2Hi;
  const double lo = kd * kLn2Lo;
  const double r = hi - lo;
  const double rr = r * r;
  const double c =
      r - rr * (kP1 + rr * (kP2 + rr * (kP3 + rr * (kP4 + rr * kP5))));
  const double y = 1.0 - ((lo - (r * c) / (2.0 - c)) - hi);
  const auto k = static_cast<std::int64_t>(kd);
  return std::bit_cast<double>(std::bit_cast<std::int64_t>(y) + (k << 52));
}

}  // namespace ph::kernels::detail
