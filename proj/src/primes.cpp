#include "ph/primes.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace ph {

namespace {

constexpr char kMagic[4] = {'P', 'H', 'L', 'D'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 4 + 8 + 4;

// Smallest sieve limit guaranteed to contain at least `count` primes:
// Rosser's upper bound n(log n + log log n - 1/2) for n >= 20, a fixed
// bound below that (p_20 = 71).
std::uint64_t sieve_limit(std::uint64_t count) {
  if (count < 20) return 73;
  const double n = static_cast<double>(count);
  const double bound = n * (std::log(n) + std::log(std::log(n)) - 0.5);
  return static_cast<std::uint64_t>(std::ceil(bound)) + 64;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t target_count,
                                        std::uint64_t segment_size) {
  const std::uint64_t limit = sieve_limit(target_count);
  std::vector<std::uint64_t> primes;
  primes.reserve(target_count);
  primes.push_back(2);
  if (target_count == 1) return primes;

  // Base odd primes up to sqrt(limit), by a plain sieve.
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(
                           static_cast<double>(limit))) +
                       2;
  std::vector<char> is_prime(root + 1, 1);
  for (std::uint64_t i = 3; i * i <= root; i += 2)
    if (is_prime[i])
      for (std::uint64_t j = i * i; j <= root; j += 2 * i) is_prime[j] = 0;
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2)
    if (is_prime[i]) base.push_back(i);

  // Odd-only segments: seg[k] stands for the odd number lo + 2k.
  const std::uint64_t span = std::max<std::uint64_t>(segment_size, 16);
  std::vector<char> seg;
  for (std::uint64_t lo = 3; lo <= limit && primes.size() < target_count;
       lo += span) {
    const std::uint64_t hi = std::min(lo + span - 1, limit);
    const std::size_t cells = static_cast<std::size_t>((hi - lo) / 2 + 1);
    seg.assign(cells, 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t v = start; v <= hi; v += 2 * p) seg[(v - lo) / 2] = 0;
    }
    for (std::size_t k = 0; k < cells && primes.size() < target_count; ++k)
      if (seg[k]) primes.push_back(lo + 2 * k);
  }
  return primes;
}

void put_u32(std::vector<unsigned char>& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back((v >> (8 * i)) & 0xff);
}

void put_u64(std::vector<unsigned char>& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back((v >> (8 * i)) & 0xff);
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

PrimeTable PrimeTable::from_primes(std::vector<std::uint64_t> primes) {
  PrimeTable t;
  t.primes_ = std::move(primes);
  return t;
}

PrimeTable build_table(const SieveConfig& config) {
  if (config.target_count < 1)
    throw ConfigError("target_count must be at least 1");
  if (config.segment_size == 0)
    throw ConfigError("segment_size must be positive");

  if (!config.cache_path.empty() &&
      std::filesystem::exists(config.cache_path)) {
    try {
      PrimeTable cached = load_cache(config.cache_path);
      if (cached.count() >= config.target_count) {
        auto all = cached.all();
        return PrimeTable::from_primes(std::vector<std::uint64_t>(
            all.begin(), all.begin() + config.target_count));
      }
      // cache valid but too small: rebuild below and refresh it
    } catch (const CacheError&) {
      if (!config.rebuild_on_corrupt) throw;
    }
  }

  PrimeTable table = PrimeTable::from_primes(
      sieve_primes(config.target_count, config.segment_size));
  if (!config.cache_path.empty()) save_cache(table, config.cache_path);
  return table;
}

void save_cache(const PrimeTable& table, const std::string& path) {
  std::vector<unsigned char> payload;
  payload.reserve(table.count() * 8);
  for (std::uint64_t p : table.all()) put_u64(payload, p);
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, payload.data(), static_cast<uInt>(payload.size())));

  std::vector<unsigned char> header;
  header.insert(header.end(), kMagic, kMagic + 4);
  put_u32(header, kFormatVersion);
  put_u64(header, table.count());
  put_u32(header, crc);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw CacheError(CacheFault::io, "cannot open cache for writing: " + path);
  out.write(reinterpret_cast<const char*>(header.data()),
            static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
  if (!out) throw CacheError(CacheFault::io, "short write to cache: " + path);
}

PrimeTable load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CacheError(CacheFault::io, "cannot open cache for reading: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

  if (bytes.size() < kHeaderSize)
    throw CacheError(CacheFault::truncated, "cache shorter than header: " + path);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw CacheError(CacheFault::bad_magic, "bad cache magic: " + path);
  const std::uint32_t version = get_u32(bytes.data() + 4);
  if (version != kFormatVersion)
    throw CacheError(CacheFault::bad_version,
                     "unsupported cache version " + std::to_string(version));
  const std::uint64_t count = get_u64(bytes.data() + 8);
  const std::uint32_t stored_crc = get_u32(bytes.data() + 16);
  if (bytes.size() != kHeaderSize + count * 8)
    throw CacheError(CacheFault::truncated,
                     "cache payload size mismatch: " + path);

  const unsigned char* payload = bytes.data() + kHeaderSize;
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, payload, static_cast<uInt>(count * 8)));
  if (crc != stored_crc)
    throw CacheError(CacheFault::checksum_mismatch,
                     "cache checksum mismatch: " + path);

  std::vector<std::uint64_t> primes(count);
  for (std::uint64_t i = 0; i < count; ++i)
    primes[i] = get_u64(payload + i * 8);
  return PrimeTable::from_primes(std::move(primes));
}

}  // namespace ph
