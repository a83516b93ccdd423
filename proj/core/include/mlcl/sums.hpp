#ifndef MLCL_SUMS_HPP
#define MLCL_SUMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlcl/psav.hpp"

namespace mlcl {

/// psi(n) = c / (n^p * M(n)^m * (log n)^l * (log log n)^e) with nonnegative
/// rational exponents, constant-extended to the left of n_start so the
/// function is defined and nonincreasing everywhere.
struct PsiFunction {
  Rat c = 1;
  Rat p = 0, m = 0, l = 0, e = 0;

  /// "psi:c=<r>,p=<r>,m=<r>,l=<r>,e=<r>"; omitted fields default to 0 (c to 1).
  static PsiFunction parse(const std::string& descriptor);
  std::string descriptor() const;

  /// True when psi(n) is an exact rational for every n (integer exponents,
  /// no logarithmic factors).
  bool exact_evaluable() const;

  /// First n with all factors defined and positive: 2 when l > 0, 16 when
  /// e > 0, n_1 when m > 0 (largest applies). psi is constant below it.
  Int n_start(const PsavSequence& D) const;

  Rat eval_exact(const Int& n, const PsavSequence& D) const;
  RatInterval eval(const Int& n, const PsavSequence& D, mpfr_prec_t prec) const;
};

struct SumColumn {
  std::string name;
  std::string note;                 // what the column instantiates
  std::vector<RatInterval> values;  // one per checkpoint
  bool exact = false;
};

struct SumSeries {
  std::vector<Int> checkpoints;
  std::vector<SumColumn> columns;
  Int exact_switch = 0;  // exact accumulation up to here, dyadic beyond
  std::string note;
};

struct SumOptions {
  Int exact_switch = Int(1000000);
  mpfr_prec_t block_log_prec = 128;
  unsigned threads = 1;  // reserved; kernels are single-pass
};

/// sum_{n<=N} 1/|n|_D, exact (an integer), computed blockwise per valuation
/// index rather than per n.
Int sum_inverse_valuation(const PsavSequence& D, const Int& N);

/// Naive per-n loop; the oracle for the blockwise form.
Int sum_inverse_valuation_naive(const PsavSequence& D, const Int& N);

/// sum_{n<=N} M(n) via the closed form (N+1)M(N) - sum_{k=1..M(N)} n_k.
/// The k >= 1 start is the brute-force-validated indexing: starting the
/// subtracted sum at k = 0 undercounts by exactly n_0 = 1.
Int sum_counting(const PsavSequence& D, const Int& N);
Int sum_counting_naive(const PsavSequence& D, const Int& N);

/// Lebesgue measure of A_n(psi/|.|_D) = min(1, 2 psi(n)/|n|_D), exact.
/// Requires an exactly evaluable psi.
Rat measure_An(const PsavSequence& D, const PsiFunction& psi, const Int& n);
RatInterval measure_An_enclosure(const PsavSequence& D, const PsiFunction& psi, const Int& n,
                                 mpfr_prec_t prec);

/// Columns: sum M(n) psi(n), sum lambda(A_n), sum psi(n)/|n|_D, plus a
/// certified tail upper bound for the first column by integral comparison
/// (meaningful when the series converges).
SumSeries dichotomy_sums(const PsavSequence& D, const PsiFunction& psi,
                         const std::vector<Int>& checkpoints, const SumOptions& opt = {});

/// Columns: sum Psi(n), sum phi(n) Psi(n)/n, their ratio, and the running
/// extrema of the ratio; Psi = psi/|.|_D.
SumSeries ds_criterion(const PsavSequence& D, const PsiFunction& psi,
                       const std::vector<Int>& checkpoints, const SumOptions& opt = {});

struct PhiSumResult {
  Rat sum;    // sum_{n<=N, d not | n} phi(n)/n, exact
  Rat ratio;  // sum / N
};

/// Exact restricted totient-ratio sum via balanced tree accumulation.
PhiSumResult phi_restricted_sum(std::uint32_t d, std::uint32_t N);

struct PhiSweepCell {
  std::uint32_t d;
  std::uint32_t N;
  Rat ratio;
};

struct PhiSweepResult {
  std::vector<PhiSweepCell> cells;  // exact ratios on the (d, N) grid
  Rat min_ratio;
  std::uint32_t argmin_d;
  std::uint32_t argmin_N;
};

/// Exact sweep sharing one phi sieve and the unrestricted prefix sums:
/// restricted(d, N) = S_all(N) - S_multiples(d, N).
PhiSweepResult phi_restricted_sweep(std::uint32_t d_lo, std::uint32_t d_hi,
                                    const std::vector<std::uint32_t>& N_grid);

/// Two algebraically equal evaluations of sum phi(n) psi(n)/(n |n|_D) for
/// exactly evaluable psi: the direct sum and the Abel partial-summation form.
Rat phi_psi_sum_direct(const PsavSequence& D, const PsiFunction& psi, std::uint32_t N);
Rat phi_psi_sum_partial_summation(const PsavSequence& D, const PsiFunction& psi, std::uint32_t N);

struct DhypRow {
  Int N;
  std::size_t M;
  Rat average;  // (sum_{k=1..M} phi(n_k)/n_k) / M
};

struct DhypReport {
  std::vector<DhypRow> rows;
  std::string flag;  // "plausibly holds" or "fails"
};

/// Per-checkpoint averages of phi(n_k)/n_k, the executable form of the
/// lower-bound hypothesis on the chain. Rows with M(N) = 0 are skipped.
DhypReport check_Dhyp(const PsavSequence& D, const std::vector<Int>& N_grid,
                      std::uint64_t trial_bound = 1000000);

}  // namespace mlcl

#endif  // MLCL_SUMS_HPP
