#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ph/numeric.hpp"

namespace ph {

enum class Direction { forward, inverse };
enum class Regime { adjacent, doubling, separated, all_pairs };
enum class Strategy { exhaustive, banded };

const char* to_string(Direction d);
const char* to_string(Regime r);
const char* to_string(Strategy s);

// One theorem instance: which map, which exponent, which constant, and the
// pair-separation regime the statement quantifies over.
struct HoelderParams {
  double epsilon = 0.0;
  Direction direction = Direction::forward;
  // Bound constant under test; empty for pure measurement scans.
  std::optional<double> constant;
  double exponent = 1.0;
  Regime regime = Regime::all_pairs;

  // Inverse-map lower bound (Theorem-1 form): exponent 1+eps.
  static HoelderParams inverse_lower(double eps, double constant);
  // Forward-map bound over adjacent pairs: exponent 1-eps.
  static HoelderParams forward_adjacent(double eps,
                                        std::optional<double> constant);
  // Forward-map bound over n < m < 2n: exponent 1-2*eps.
  static HoelderParams forward_doubling(double eps, double constant);

  void validate() const;
};

struct RatioRecord {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double value = 0.0;
  EvalMode eval_mode = EvalMode::fast;
};

// Aggregated scan outcome. `empirical_n` is the largest index appearing on
// the small side of any violation (1 when the scan is clean): the least
// threshold such that no violating pair has both indices above it, within
// this horizon. Never extrapolated.
struct ScanReport {
  HoelderParams params;
  Strategy strategy = Strategy::exhaustive;
  std::uint64_t n_start = 0;
  std::uint64_t n_end = 0;  // horizon
  RatioRecord extremum;     // meaningful only when pairs_checked > 0
  std::vector<RatioRecord> violations;  // sorted by (n, m)
  std::uint64_t empirical_n = 1;
  std::uint64_t pairs_checked = 0;
  std::uint64_t escalations = 0;
  // Per-n extremal values, populated when ScanOptions::collect_curve is set.
  std::vector<std::pair<std::uint64_t, double>> curve;
  // Op-specific extras (corollary thresholds, coverage flags, ...).
  std::vector<std::pair<std::string, std::string>> meta;

  bool has_coverage() const { return pairs_checked > 0; }
};

}  // namespace ph
