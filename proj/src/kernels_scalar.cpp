#include "ph/kernels.hpp"

#include "kernels_detail.hpp"

namespace ph::kernels {
namespace {

void log_pd_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = detail::log_core(x[i]);
}

void exp_pd_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = detail::exp_core(x[i]);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", &log_pd_scalar, &exp_pd_scalar};
  return backend;
}

double log1(double x) { return detail::log_core(x); }
double exp1(double x) { return detail::exp_core(x); }
double pow1(double x, double a) { return exp1(a * log1(x)); }

}  // namespace ph::kernels
