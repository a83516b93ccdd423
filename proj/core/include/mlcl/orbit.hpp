#ifndef MLCL_ORBIT_HPP
#define MLCL_ORBIT_HPP

#include <optional>
#include <vector>

#include "mlcl/psav.hpp"
#include "mlcl/real.hpp"

namespace mlcl {

struct ConstructionParams {
  Int a;                 // base >= 2, coprime to the chain's prime support
  PsavSequence D;        // chain with finite prime support
  std::size_t k = 2;     // number of chain indices 1..k entering the bins
  std::optional<Rat> delta;  // growth exponent, echoed into the report
  std::uint64_t support_trial_bound = 1000000;
  PrecisionPolicy policy;
  mpfr_prec_t report_prec = 192;  // precision of report-only enclosures
};

struct SelectedIndex {
  std::size_t ell;
  Int sigma;
  RatInterval tau;
};

struct PairCheck {
  std::size_t i, j;                 // positions in the selected list, i < j
  Rat ratio;                        // t_j / t_i, exact
  bool certified;                   // 1 < ratio and ratio^M < a, exact integer checks
  RatInterval log_ratio;            // log(t_j/t_i) from the exact ratio
  RatInterval log_ratio_exponents;  // prime-exponent form of the same quantity
  RatInterval log_ratio_tau;        // log(a) * (tau_j - tau_i)
  bool forms_agree;                 // the three enclosures pairwise overlap
};

struct ConstructionResult {
  std::size_t m_bins;               // smallest integer > 2 log a
  std::vector<std::size_t> bin_counts;
  std::size_t bin_index;            // densest bin (ties to the lowest index)
  std::vector<SelectedIndex> selected;  // sorted by tau, certified exactly
  Int sigma_prime;
  std::vector<Int> t;               // t_i = a^(sigma' - sigma_i) n_i, strictly increasing
  std::vector<PairCheck> pairs;
  RatInterval min_log_ratio;        // min over adjacent pairs (empirical gap scale)
  std::vector<Int> prime_support;
};

/// Bins tau_1..tau_k into M intervals, selects the densest bin, forms the t_i
/// chain, and certifies every pairwise ratio bound 1 < t_j/t_i < a^(1/M).
/// Binning and the tau ordering are decided by exact integer power
/// comparisons, so bin boundaries never need precision escalation.
ConstructionResult construct_chain(const ConstructionParams& params);

struct BwGapRow {
  unsigned height;            // B'
  RatInterval min_gap;        // min |sum b_r log a_r| over 0 < max|b_r| <= B'
  std::vector<long> argmin;
};

struct BwGapResult {
  std::vector<BwGapRow> per_height;
  RatInterval min_gap;        // at the full height B
  std::vector<long> argmin;
  double fitted_kappa;        // least exponent with min_gap(B')*(3B')^kappa >= 1, fitted
  bool kappa_certified;       // the inequality re-verified with outward rounding
};

/// Brute-force linear-form-in-logarithms gaps over integer vectors of height
/// at most B. Vectors are ordered exactly (integer cross-multiplication), and
/// exact equality of the two power products reports multiplicative dependence
/// as a validation error.
BwGapResult bw_gap(const std::vector<Int>& bases, unsigned B,
                   std::uint64_t budget = 20000000, const PrecisionPolicy& policy = {});

struct GammaResult {
  RatInterval gamma;   // certified inside [1/(t1 a^2), 1/(t1 a))
  std::size_t i, j;    // witness: beta from (a^i - a^j) alpha mod 1
  bool negated;        // the symmetric point 1 - frac was used
  unsigned long b;     // gamma = a^b * beta
};

/// Searches (a^i - a^j) alpha mod 1, i > j, i <= budget (both signs), for a
/// point in (0, 1/(t1 a^2)), then scales it into the target window. Returns
/// nullopt when the budget is exhausted (a budget failure, not a refutation).
std::optional<GammaResult> find_gamma(const RealNumber& alpha, const Int& a, const Int& t1,
                                      std::size_t budget, const PrecisionPolicy& policy = {});

/// Enclosures of a^l n_k alpha mod 1 for l <= L, k <= K, deduplicated at
/// resolution tol (midpoint clustering); exact points for rational alpha.
std::vector<RatInterval> orbit_points(const RealNumber& alpha, const Int& a,
                                      const PsavSequence& D, std::size_t L, std::size_t K,
                                      const Rat& tol, const PrecisionPolicy& policy = {});

struct SeparatedCount {
  Rat epsilon;
  std::size_t count;          // greedy count: a lower bound for s(A, eps)
  std::vector<Rat> witness;   // the greedy eps-separated subset
};

/// Deterministic greedy eps-separated subset of exact circle points
/// (ascending representative order).
SeparatedCount separated_count(const std::vector<Rat>& points, const Rat& eps);

/// Same greedy on enclosures; requires widths < eps/4 and raises
/// PrecisionCapError when a pairwise comparison cannot be certified.
SeparatedCount separated_count_enclosures(const std::vector<RatInterval>& points, const Rat& eps);

/// Interval-cover upper bound for s(A, eps): half-open length-eps intervals
/// swept left to right (each holds at most one eps-separated point).
std::size_t cover_upper_bound(const std::vector<Rat>& points, const Rat& eps);

/// A - A on the torus (all pairwise differences mod 1).
std::vector<Rat> difference_set(const std::vector<Rat>& points);

struct BoxDimPoint {
  Rat eps;
  std::size_t count;
};

struct BoxDimResult {
  double slope;                    // least-squares slope of log(count) vs log(1/eps)
  std::vector<BoxDimPoint> counts;
  std::vector<double> residuals;
};

/// Upper-box-dimension estimator from greedy separated counts on a geometric
/// epsilon grid (>= 4 strictly decreasing values).
BoxDimResult box_dimension_estimate(const std::vector<Rat>& points,
                                    const std::vector<Rat>& eps_grid);

struct EntropyCountResult {
  std::vector<std::size_t> counts;         // greedy (n, eps)-separated counts, n = 1..n_steps
  std::vector<double> log_count_over_n;
};

/// Greedy (n, eps)-separated counts under x -> a x mod 1; log(count)/n is a
/// desk-scale lower-bound witness for the entropy of the restriction.
EntropyCountResult entropy_count(const std::vector<Rat>& points, const Int& a,
                                 std::size_t n_steps, const Rat& eps);

}  // namespace mlcl

#endif  // MLCL_ORBIT_HPP
