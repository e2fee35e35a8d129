#pragma once

#include <stdexcept>
#include <string>

namespace ph {

// Argument outside an operation's mathematical domain (e.g. Rosser below
// n=20, negative epsilon, non-positive Jensen input).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index outside the prime table or an empty/inverted scan range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Invalid run configuration (bad strategy, range over the quadratic cap,
// unwritable output).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CacheFault {
  io,
  bad_magic,
  bad_version,
  truncated,
  checksum_mismatch,
};

class CacheError : public std::runtime_error {
 public:
  CacheError(CacheFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  CacheFault fault() const { return fault_; }

 private:
  CacheFault fault_;
};

}  // namespace ph
