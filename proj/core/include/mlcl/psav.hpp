#ifndef MLCL_PSAV_HPP
#define MLCL_PSAV_HPP

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mlcl/interval.hpp"
#include "mlcl/mpfr_util.hpp"
#include "mlcl/rng.hpp"

namespace mlcl {

/// |n|_D = 1/terms[index] with index maximal among materialized terms dividing n.
struct Valuation {
  std::size_t index;
  Rat value;
};

struct GrowthHypothesisReport {
  bool holds;
  std::size_t worst_k = 0;         // k maximizing log(n_k)/k^delta among tested k
  RatInterval worst_ratio;         // enclosure of that maximum
  std::optional<std::size_t> first_failure;
};

enum class PsavFamily { Geometric, Factorial, PrimorialMertens, BoundedRatio, Explicit, Prefix };

/// A pseudo-absolute value sequence: n_0 = 1 | n_1 | n_2 | ..., strictly
/// increasing. Generator-backed families extend lazily on demand; `explicit:`
/// chains are complete finite sequences, while `file:` chains are treated as
/// prefixes of an unspecified longer chain and raise SequenceTooShortError
/// when an operation needs terms past the end.
///
/// Concurrency: queries are safe from many threads once the needed prefix is
/// materialized (ensure_cover); extension takes an internal lock. Materialized
/// terms never move (deque storage), so readers race only on the atomic count.
class PsavSequence {
 public:
  static PsavSequence geometric(const Int& a);
  static PsavSequence factorial();
  static PsavSequence primorial_mertens();
  static PsavSequence bounded_ratio(unsigned bound, std::uint64_t seed);
  static PsavSequence explicit_chain(std::vector<Int> terms);
  static PsavSequence prefix_chain(std::vector<Int> terms, std::string origin = "");

  /// Family descriptor mini-language:
  ///   geometric:<a> | factorial | primorial-mertens | bounded-ratio:<B>:<seed>
  ///   | explicit:<n0,n1,...> | file:<path>
  static PsavSequence parse(const std::string& descriptor);

  PsavFamily family() const;
  std::string descriptor() const;
  /// Seed of the bounded-ratio generator (recorded in reports), 0 otherwise.
  std::uint64_t seed() const;

  /// n_k, materializing as needed.
  const Int& term(std::size_t k) const;
  /// Materializes terms until the last one exceeds `bound` (or the chain
  /// ends); returns the materialized count. For prefix chains whose last term
  /// is <= bound this throws SequenceTooShortError.
  std::size_t ensure_cover(const Int& bound) const;
  std::size_t materialized() const;
  bool is_finite() const;

  /// d_k = n_k / n_{k-1}, k >= 1 (always an integer >= 2).
  Int ratio(std::size_t k) const;

  /// The D-adic value |n|_D with its chain index, n >= 1.
  Valuation value(const Int& n) const;
  /// M(N) = max{k : n_k <= N}, N >= 1.
  std::size_t counting(const Int& N) const;

  /// Verifies log(n_k) <= k^delta for 2 <= k <= k_max with certified
  /// directed-rounding logs; comparisons escalate precision, so a verdict is
  /// never produced from an ambiguous enclosure.
  GrowthHypothesisReport check_growth_hypothesis(const Rat& delta, std::size_t k_max,
                                                 const PrecisionPolicy& policy = {}) const;

  /// max_{1 <= k <= k_max} d_k.
  Int max_ratio(std::size_t k_max) const;

  /// Finite prime support when the family guarantees one (geometric and
  /// explicit/prefix chains small enough to factor), nullopt otherwise.
  std::optional<std::vector<Int>> prime_support(std::uint64_t trial_bound = 1000000) const;

  /// phi(n_k)/n_k as an exact rational, using family structure where
  /// available and trial division otherwise; throws ValidationError naming
  /// the term when it cannot be factored.
  Rat term_phi_ratio(std::size_t k, std::uint64_t trial_bound = 1000000) const;

 private:
  struct State;
  explicit PsavSequence(std::shared_ptr<State> st) : st_(std::move(st)) {}

  std::shared_ptr<State> st_;
};

}  // namespace mlcl

#endif  // MLCL_PSAV_HPP
