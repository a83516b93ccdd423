#ifndef MLCL_MPFR_UTIL_HPP
#define MLCL_MPFR_UTIL_HPP

#include <mpfr.h>

#include <optional>
#include <utility>

#include "mlcl/interval.hpp"

namespace mlcl {

/// Escalating working precision for enclosure refinement. cap_bits is the
/// user-facing --precision-cap: refinement never exceeds it, and a verdict
/// still ambiguous there raises PrecisionCapError.
struct PrecisionPolicy {
  mpfr_prec_t start_bits = 96;
  mpfr_prec_t cap_bits = 1 << 16;

  PrecisionPolicy() = default;
  PrecisionPolicy(mpfr_prec_t start, mpfr_prec_t cap) : start_bits(start), cap_bits(cap) {}
  static PrecisionPolicy with_cap(mpfr_prec_t cap) { return PrecisionPolicy(96, cap); }
};

/// Runs f(prec) with prec doubling from policy.start_bits to policy.cap_bits;
/// f returns nullopt to request more precision.
template <class T, class F>
T refine_until(F&& f, const PrecisionPolicy& policy, const char* what) {
  mpfr_prec_t p = policy.start_bits;
  while (true) {
    if (auto r = f(p)) return *r;
    if (p >= policy.cap_bits) {
      throw PrecisionCapError(std::string("undecidable at precision cap: ") + what);
    }
    p = std::min<mpfr_prec_t>(p * 2, policy.cap_bits);
  }
}

class MpfrFloat {
 public:
  explicit MpfrFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  MpfrFloat(const MpfrFloat&) = delete;
  MpfrFloat& operator=(const MpfrFloat&) = delete;
  MpfrFloat(MpfrFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ~MpfrFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

/// Exact rational value of an MPFR number (binary floats are rational).
Rat mpfr_to_rat(mpfr_srcptr x);

/// ln(n) for integer n >= 1; exact 0 for n = 1.
RatInterval log_enclosure(const Int& n, mpfr_prec_t prec);

/// ln(q) for rational q > 0; exact 0 for q = 1.
RatInterval log_enclosure(const Rat& q, mpfr_prec_t prec);

/// ln over an interval with positive lower endpoint.
RatInterval log_interval(const RatInterval& x, mpfr_prec_t prec);

/// e^x over an interval of exact rationals.
RatInterval exp_interval(const RatInterval& x, mpfr_prec_t prec);

/// base^expo for rational base > 0 and rational expo; exact for integer
/// exponents of moderate size, otherwise via exp(expo * ln base).
RatInterval pow_enclosure(const Rat& base, const Rat& expo, mpfr_prec_t prec);

/// sqrt(d) for integer d >= 0; exact for perfect squares.
RatInterval sqrt_enclosure(const Int& d, mpfr_prec_t prec);

/// base^-expo over an interval with positive lower endpoint, expo >= 0
/// (decreasing in the base, so endpoint evaluations enclose it).
RatInterval pow_enclosure_interval_reciprocal(const RatInterval& base, const Rat& expo,
                                              mpfr_prec_t prec);

}  // namespace mlcl

#endif  // MLCL_MPFR_UTIL_HPP
