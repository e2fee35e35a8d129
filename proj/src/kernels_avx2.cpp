#include "ph/kernels.hpp"

#include "kernels_detail.hpp"

#if defined(PH_KERNELS_AVX2)

#include <immintrin.h>

// 4-lane mirror of kernels_detail.hpp. Multiplies and adds are kept separate
// (no _mm256_fmadd_pd) so every lane rounds exactly like the scalar path.

namespace ph::kernels {
namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// Exact u64 -> double for values < 2^52 (here: biased exponents < 2^11).
inline __m256d small_u64_to_pd(__m256i v) {
  const __m256i magic_i = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d magic_d = _mm256_castsi256_pd(magic_i);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic_i)),
                       magic_d);
}

inline __m256d log_lanes(__m256d x) {
  using namespace detail;
  const __m256i u = _mm256_castpd_si256(x);
  const __m256i biased = _mm256_srli_epi64(u, 52);  // x > 0, so no sign bit
  const __m256i mant = _mm256_or_si256(
      _mm256_and_si256(u, _mm256_set1_epi64x(0x000fffffffffffffLL)),
      _mm256_set1_epi64x(0x3ff0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant);
  const __m256d halve = _mm256_cmp_pd(m, splat(kSqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), halve);
  __m256d k = _mm256_sub_pd(small_u64_to_pd(biased), splat(1023.0));
  k = _mm256_add_pd(k, _mm256_and_pd(halve, splat(1.0)));

  const __m256d f = _mm256_sub_pd(m, splat(1.0));
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(splat(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  __m256d t1 = _mm256_add_pd(_mm256_mul_pd(w, splat(kLg6)), splat(kLg4));
  t1 = _mm256_add_pd(_mm256_mul_pd(w, t1), splat(kLg2));
  t1 = _mm256_mul_pd(w, t1);
  __m256d t2 = _mm256_add_pd(_mm256_mul_pd(w, splat(kLg7)), splat(kLg5));
  t2 = _mm256_add_pd(_mm256_mul_pd(w, t2), splat(kLg3));
  t2 = _mm256_add_pd(_mm256_mul_pd(w, t2), splat(kLg1));
  t2 = _mm256_mul_pd(z, t2);
  const __m256d r = _mm256_add_pd(t2, t1);
  const __m256d hfsq = _mm256_mul_pd(_mm256_mul_pd(splat(0.5), f), f);

  // k*ln2hi - ((hfsq - (s*(hfsq+r) + k*ln2lo)) - f)
  const __m256d inner = _mm256_add_pd(_mm256_mul_pd(s, _mm256_add_pd(hfsq, r)),
                                      _mm256_mul_pd(k, splat(kLn2Lo)));
  return _mm256_sub_pd(_mm256_mul_pd(k, splat(kLn2Hi)),
                       _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f));
}

inline __m256d exp_lanes(__m256d x) {
  using namespace detail;
  const __m256d kd =
      _mm256_round_pd(_mm256_mul_pd(x, splat(kInvLn2)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d hi = _mm256_sub_pd(x, _mm256_mul_pd(kd, splat(kLn2Hi)));
  const __m256d lo = _mm256_mul_pd(kd, splat(kLn2Lo));
  const __m256d r = _mm256_sub_pd(hi, lo);
  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d p = _mm256_add_pd(_mm256_mul_pd(rr, splat(kP5)), splat(kP4));
  p = _mm256_add_pd(_mm256_mul_pd(rr, p), splat(kP3));
  p = _mm256_add_pd(_mm256_mul_pd(rr, p), splat(kP2));
  p = _mm256_add_pd(_mm256_mul_pd(rr, p), splat(kP1));
  const __m256d c = _mm256_sub_pd(r, _mm256_mul_pd(rr, p));
  const __m256d quot =
      _mm256_div_pd(_mm256_mul_pd(r, c), _mm256_sub_pd(splat(2.0), c));
  const __m256d y = _mm256_sub_pd(
      splat(1.0), _mm256_sub_pd(_mm256_sub_pd(lo, quot), hi));

  // scale y by 2^k via the exponent field; |k| stays far from the limits
  const __m128i k32 = _mm256_cvtpd_epi32(kd);
  const __m256i k64 = _mm256_cvtepi32_epi64(k32);
  const __m256i ybits = _mm256_castpd_si256(y);
  return _mm256_castsi256_pd(
      _mm256_add_epi64(ybits, _mm256_slli_epi64(k64, 52)));
}

void log_pd_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, log_lanes(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = detail::log_core(x[i]);
}

void exp_pd_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, exp_lanes(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = detail::exp_core(x[i]);
}

}  // namespace

const Backend* avx2_backend() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Backend backend{"avx2", &log_pd_avx2, &exp_pd_avx2};
  return &backend;
}

}  // namespace ph::kernels

#else

namespace ph::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace ph::kernels

#endif
