#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ph/errors.hpp"

namespace ph {

// Immutable 1-based table of the first `count()` primes. Built once, then
// shared read-only across scan workers.
class PrimeTable {
 public:
  PrimeTable() = default;
  static PrimeTable from_primes(std::vector<std::uint64_t> primes);

  // p_n, 1-based as in the usual convention (nth(1) == 2).
  std::uint64_t nth(std::uint64_t n) const {
    if (n < 1 || n > primes_.size())
      throw RangeError("prime index out of range: n=" + std::to_string(n) +
                       ", table holds " + std::to_string(primes_.size()));
    return primes_[n - 1];
  }

  // p_{n+1} - p_n; requires n+1 <= count().
  std::uint64_t gap(std::uint64_t n) const { return nth(n + 1) - nth(n); }

  std::uint64_t count() const { return primes_.size(); }
  std::span<const std::uint64_t> all() const { return primes_; }

  // Raw pointer to p_n for contiguous block access in scan loops.
  const std::uint64_t* data_at(std::uint64_t n) const {
    return primes_.data() + (n - 1);
  }

 private:
  std::vector<std::uint64_t> primes_;
};

struct SieveConfig {
  std::uint64_t target_count = 0;
  // Sieve segment length in integers; performance-only, never affects output.
  std::uint64_t segment_size = std::uint64_t{1} << 20;
  std::string cache_path;            // empty: no persistence
  bool rebuild_on_corrupt = true;    // false: corrupt cache throws
};

// Segmented sieve of Eratosthenes up to a Rosser-derived bound, trimmed to
// exactly target_count primes. When cache_path is set, a valid cache with at
// least target_count primes is used instead of sieving, and fresh builds are
// persisted back.
PrimeTable build_table(const SieveConfig& config);

// Versioned, checksummed binary cache (see README for the exact layout).
void save_cache(const PrimeTable& table, const std::string& path);
PrimeTable load_cache(const std::string& path);

}  // namespace ph
