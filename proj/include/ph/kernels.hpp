#pragma once

#include <cstddef>
#include <string>

// Elementwise transcendental kernels used by every scan's fast path.
//
// All backends implement the same reduction + polynomial with the same
// operation order and no fused multiply-adds, so scalar and SIMD variants
// return bit-identical results lane by lane. That makes reports independent
// of the dispatched backend and of any chunking of the input arrays.
//
// Domain contract (unchecked in release builds): inputs are finite, normal
// doubles; log_pd requires x > 0; exp_pd requires |x| <= 700. Everything the
// scans feed in (integers >= 1 cast to double, ratios of 128-bit exact
// deltas, products of logs) lives comfortably inside that domain.

namespace ph::kernels {

struct Backend {
  const char* name;
  void (*log_pd)(const double* x, double* y, std::size_t n);
  void (*exp_pd)(const double* x, double* y, std::size_t n);
};

// Portable reference backend. Always available.
const Backend& scalar_backend();

// AVX2 backend, or nullptr when not compiled in or not supported by the CPU.
const Backend* avx2_backend();

// Backend used by the library. Resolution order: force(), then the
// PRIME_HOELDER_KERNEL environment variable ("scalar"/"avx2"), then the best
// available.
const Backend& active();

// Pin the active backend by name ("auto" restores detection). Throws
// ph::ConfigError for an unknown or unavailable backend.
void force(const std::string& name);

// Single-value entry points. Same algorithm as the batch kernels, so
// log1(x) equals the batch output for x in any position of any array.
double log1(double x);
double exp1(double x);

// pow through the log domain: exp1(a * log1(x)). This is the library-wide
// definition of x^a on the fast path.
double pow1(double x, double a);

}  // namespace ph::kernels
