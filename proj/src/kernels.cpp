#include "ph/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "ph/errors.hpp"

namespace ph::kernels {
namespace {

const Backend* lookup(const std::string& name) {
  if (name == "scalar") return &scalar_backend();
  if (name == "avx2") return avx2_backend();
  return nullptr;
}

std::atomic<const Backend*> g_forced{nullptr};

const Backend& detect() {
  if (const char* env = std::getenv("PRIME_HOELDER_KERNEL")) {
    if (const Backend* b = lookup(env)) return *b;
  }
  if (const Backend* b = avx2_backend()) return *b;
  return scalar_backend();
}

}  // namespace

const Backend& active() {
  if (const Backend* forced = g_forced.load(std::memory_order_acquire))
    return *forced;
  static const Backend& detected = detect();
  return detected;
}

void force(const std::string& name) {
  if (name == "auto" || name.empty()) {
    g_forced.store(nullptr, std::memory_order_release);
    return;
  }
  const Backend* b = lookup(name);
  if (b == nullptr)
    throw ConfigError("unknown or unavailable kernel backend: " + name);
  g_forced.store(b, std::memory_order_release);
}

}  // namespace ph::kernels
