#ifndef MLCL_TRAJECTORY_HPP
#define MLCL_TRAJECTORY_HPP

#include <optional>
#include <vector>

#include "mlcl/psav.hpp"
#include "mlcl/real.hpp"

namespace mlcl {

struct TrajectoryRecord {
  Int n;
  RatInterval term;         // n * |n|_a * |n|_D * ||n alpha|| (|n|_a omitted without a base)
  RatInterval running_min;
  Int argmin;               // first n attaining the current certified minimum
};

struct ScanOptions {
  std::optional<Rat> tol;       // fixed enclosure width; default: relative 2^-10 per term
  std::uint64_t emit_every = 0; // also emit every k-th n (0 = improvements only)
  unsigned threads = 1;
  std::uint64_t block_size = 1 << 16;
  PrecisionPolicy policy;
};

struct ScanResult {
  std::vector<TrajectoryRecord> records;
  RatInterval final_min;
  Int argmin;
  std::vector<std::pair<Int, Int>> blocks;  // processed [lo, hi] ranges, in merge order
};

/// Enclosure of the mixed product at a single n; the result width is at most
/// tol. Passing no base computes the two-factor variant n |n|_D ||n alpha||.
RatInterval mixed_term(const RealNumber& alpha, const std::optional<Int>& a,
                       const PsavSequence& D, const Int& n, const Rat& tol,
                       const PrecisionPolicy& policy = {});

/// Running infimum of the mixed product over 1 <= n <= n_max. Records are
/// emitted at n = 1, whenever the certified upper bound of the running
/// minimum strictly drops, and at every emit_every-th n. Blocks are processed
/// independently (parallel-safe) and merged in index order, so results do not
/// depend on thread timing.
ScanResult infimum_scan(const RealNumber& alpha, const std::optional<Int>& a,
                        const PsavSequence& D, const Int& n_max, const ScanOptions& opt = {});

struct BadCResult {
  std::optional<Int> violated_at;  // first n <= n_max with n ||n alpha|| <= c, certified
};

/// Scans for the first certified violation of inf n||n alpha|| > c.
BadCResult bad_c_test(const RealNumber& alpha, const Rat& c, const Int& n_max,
                      const PrecisionPolicy& policy = {});

}  // namespace mlcl

#endif  // MLCL_TRAJECTORY_HPP
