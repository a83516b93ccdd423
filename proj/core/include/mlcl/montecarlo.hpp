#ifndef MLCL_MONTECARLO_HPP
#define MLCL_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mlcl/psav.hpp"
#include "mlcl/real.hpp"
#include "mlcl/sums.hpp"

namespace mlcl {

struct McConfig {
  std::string chain_descriptor;
  std::string psi_descriptor;
  std::uint32_t samples = 100;
  Int n_max = Int(1000000);
  std::uint64_t seed = 1;
  std::vector<Int> checkpoints;  // default: powers of 10 up to n_max
  unsigned threads = 1;
  PrecisionPolicy policy;
};

struct McSampleRow {
  std::uint32_t sample;
  std::uint64_t sub_seed;
  Int checkpoint;
  std::uint64_t count;      // certified solutions n <= checkpoint
  std::uint64_t undecided;  // comparisons still ambiguous at the precision cap
};

struct McReport {
  McConfig config;
  std::vector<Int> checkpoints;
  std::vector<McSampleRow> rows;            // samples x checkpoints, sample-major
  std::vector<RatInterval> reference;       // sum lambda(A_n) at the checkpoints
  std::vector<std::uint64_t> median_count;  // per checkpoint
  std::vector<Rat> mean_count;              // per checkpoint
  std::string verdict;
};

/// Counts certified solutions of |n|_D ||n alpha|| <= psi(n) for seeded
/// uniform-random alpha samples. Samples run on independent RNG substreams
/// derived from the master seed (see substream_seed), so the report is
/// byte-deterministic for a fixed config and independent of thread count.
/// Ambiguous comparisons at the precision cap land in the undecided column,
/// never in the counts.
McReport run_mc(const McConfig& config);

struct SolutionRecord {
  Int n;
  RatInterval lhs;        // |n|_D ||n alpha||
  RatInterval threshold;  // psi(n)
};

/// Certified solutions for a single alpha; the enclosure pair documents the
/// margin of each verdict.
std::vector<SolutionRecord> solution_stream(const RealNumber& alpha, const PsavSequence& D,
                                            const PsiFunction& psi, const Int& n_max,
                                            const PrecisionPolicy& policy = {});

}  // namespace mlcl

#endif  // MLCL_MONTECARLO_HPP
