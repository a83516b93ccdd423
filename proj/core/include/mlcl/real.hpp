#ifndef MLCL_REAL_HPP
#define MLCL_REAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlcl/interval.hpp"
#include "mlcl/mpfr_util.hpp"
#include "mlcl/quadratic.hpp"

namespace mlcl {

enum class RealKind { Rational, Quadratic, ExplicitCf, Liouville, UniformRandom };

/// Certified order of a computed quantity against a rational threshold.
enum class Order { Less, Equal, Greater };

/// Enclosure of ||n*alpha||, a subset of [0, 1/2]; exact (width 0) for
/// rational alpha.
struct DistResult {
  RatInterval value;
};

/// sigma + tau decomposition of log_a(m): sigma exact by integer power
/// comparison, tau in [0,1) enclosed to the requested width (exact 0 when m
/// is a power of a).
struct FracLogResult {
  Int sigma;
  RatInterval tau;
  bool exact;
};

/// Strictly increasing exponent schedule e_1 < e_2 < ... for Liouville-type
/// sums; factorial (i!) and power (g^i, g >= 2) schedules are infinite.
class LiouvilleSchedule {
 public:
  static LiouvilleSchedule factorial();
  static LiouvilleSchedule power(unsigned long g);

  /// e_i for i >= 1.
  Int exponent(std::size_t i) const;
  std::string str() const;

 private:
  enum class Kind { Factorial, Power } kind_;
  unsigned long g_ = 0;
  LiouvilleSchedule(Kind k, unsigned long g) : kind_(k), g_(g) {}
};

/// An exact or rigorously approximable real number. All verdict-bearing
/// queries either compute exactly (rational, quadratic) or follow the
/// enclosure protocol: refine until the comparison is strict, escalate
/// precision, and raise PrecisionCapError instead of guessing near ties.
///
/// Immutable after construction except for internal cache extension, which is
/// serialized by a lock; cached convergents never move.
class RealNumber {
 public:
  static RealNumber rational(const Rat& v);
  static RealNumber quadratic(const QuadraticReal& v);
  static RealNumber sqrt_of(const Int& d);
  static RealNumber golden();
  /// Finite prefix of an infinite continued fraction (the tail is unknown).
  static RealNumber explicit_cf(std::vector<Int> quotients);
  /// Eventually periodic continued fraction (a quadratic irrational).
  static RealNumber periodic_cf(std::vector<Int> pre, std::vector<Int> period);
  static RealNumber liouville(unsigned long base, const LiouvilleSchedule& sched);
  static RealNumber uniform_random(std::uint64_t seed);

  /// Descriptor mini-language:
  ///   rational:<p>/<q> | sqrt:<d> | golden | cf:<a0>;<a1>,...,(<period>)
  ///   | liouville:<base>:factorial | liouville:<base>:pow:<g> | random:<seed>
  static RealNumber parse(const std::string& descriptor);

  RealKind kind() const;
  std::string descriptor() const;
  bool is_rational_value() const;
  std::optional<Rat> as_rational() const;
  std::optional<QuadraticReal> as_quadratic() const;

  /// Certified enclosure of alpha with width <= max_width.
  RatInterval enclosure(const Rat& max_width, const PrecisionPolicy& policy = {}) const;

  /// Partial quotient a_m (m >= 0) and convergent (p_m, q_m). For rational
  /// alpha the continued fraction is finite; cf_length() reports its size.
  /// Stream-backed kinds certify quotients from enclosures and may throw
  /// InsufficientCfError / PrecisionCapError.
  Int partial_quotient(std::size_t m, const PrecisionPolicy& policy = {}) const;
  std::pair<Int, Int> convergent(std::size_t m, const PrecisionPolicy& policy = {}) const;
  std::optional<std::size_t> cf_length() const;

  /// ||n*alpha|| with enclosure width <= tol (exact for rational alpha).
  DistResult dist(const Int& n, const Rat& tol, const PrecisionPolicy& policy = {}) const;

  /// Certified order of n*||n*alpha|| against a threshold. Exact kinds can
  /// return Equal; enclosure kinds throw PrecisionCapError on persistent ties.
  Order order_n_dist(const Int& n, const Rat& threshold,
                     const PrecisionPolicy& policy = {}) const;

  /// Bound metadata recorded by make_bad: max partial quotient K and the
  /// classical guarantee n*||n*alpha|| >= 1/(K+2).
  std::optional<Int> quotient_bound() const;
  std::optional<Rat> bad_lower_bound() const;

  /// For Liouville numbers: exact enclosure of n_i*||n_i*alpha|| at the
  /// witness denominator n_i = base^{e_i}, i >= 1.
  RatInterval liouville_witness(std::size_t i) const;
  Int liouville_witness_denominator(std::size_t i) const;

 private:
  struct Impl;
  explicit RealNumber(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;

  friend RealNumber make_bad(const std::vector<Int>&, const std::vector<Int>&,
                             std::optional<Int>);
};

/// Badly approximable constructor: eventually periodic continued fraction
/// with declared quotient bound (inferred from the quotients when omitted).
/// Rational descriptors (empty period) are rejected.
RealNumber make_bad(const std::vector<Int>& pre, const std::vector<Int>& period,
                    std::optional<Int> declared_bound = std::nullopt);

/// Well approximable constructor: alpha = sum base^{-e_i} with schedule
/// growing fast enough that the witness values tend to 0; the witnesses are
/// computable exactly either way via liouville_witness.
RealNumber make_well(unsigned long base, const LiouvilleSchedule& sched);

/// sigma/tau split of log_a(m) used to write m = a^(sigma+tau).
FracLogResult frac_log_ratio(const Int& m, const Int& a, const Rat& tol,
                             const PrecisionPolicy& policy = {});

}  // namespace mlcl

#endif  // MLCL_REAL_HPP
