#include "mlcl/mpfr_util.hpp"

namespace mlcl {

Rat mpfr_to_rat(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rat(0);
  Rat q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

RatInterval log_enclosure(const Int& n, mpfr_prec_t prec) {
  if (n < 1) throw ValidationError("log of non-positive integer");
  if (n == 1) return RatInterval::exact(Rat(0));
  MpfrFloat lo(prec), hi(prec);
  mpfr_set_z(lo.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_z(hi.get(), n.get_mpz_t(), MPFR_RNDU);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {mpfr_to_rat(lo.get()), mpfr_to_rat(hi.get())};
}

RatInterval log_enclosure(const Rat& q, mpfr_prec_t prec) {
  if (q <= 0) throw ValidationError("log of non-positive rational");
  if (q == 1) return RatInterval::exact(Rat(0));
  MpfrFloat lo(prec), hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {mpfr_to_rat(lo.get()), mpfr_to_rat(hi.get())};
}

RatInterval log_interval(const RatInterval& x, mpfr_prec_t prec) {
  if (x.lo <= 0) throw ValidationError("log over interval touching 0");
  RatInterval a = log_enclosure(x.lo, prec);
  if (x.is_exact()) return a;
  RatInterval b = log_enclosure(x.hi, prec);
  return {a.lo, b.hi};
}

RatInterval exp_interval(const RatInterval& x, mpfr_prec_t prec) {
  MpfrFloat lo(prec), hi(prec);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return {mpfr_to_rat(lo.get()), mpfr_to_rat(hi.get())};
}

RatInterval pow_enclosure(const Rat& base, const Rat& expo, mpfr_prec_t prec) {
  if (base <= 0) throw ValidationError("pow_enclosure: base must be positive");
  if (expo == 0 || base == 1) return RatInterval::exact(Rat(1));
  if (expo.get_den() == 1 && rat_abs(expo) <= 4096) {
    // exact integer power
    long e = static_cast<long>(mpz_get_si(expo.get_num().get_mpz_t()));
    Int num = ipow(base.get_num(), static_cast<unsigned long>(e < 0 ? -e : e));
    Int den = ipow(base.get_den(), static_cast<unsigned long>(e < 0 ? -e : e));
    return RatInterval::exact(e >= 0 ? make_rat(num, den) : make_rat(den, num));
  }
  RatInterval l = log_enclosure(base, prec);
  return exp_interval(l * expo, prec);
}

RatInterval pow_enclosure_interval_reciprocal(const RatInterval& base, const Rat& expo,
                                              mpfr_prec_t prec) {
  if (base.lo <= 0) throw ValidationError("reciprocal power of interval touching 0");
  if (expo < 0) throw ValidationError("reciprocal power expects expo >= 0");
  RatInterval at_lo = pow_enclosure(base.lo, -expo, prec);
  RatInterval at_hi = pow_enclosure(base.hi, -expo, prec);
  return {at_hi.lo, at_lo.hi};
}

RatInterval sqrt_enclosure(const Int& d, mpfr_prec_t prec) {
  if (d < 0) throw ValidationError("sqrt of negative integer");
  Int r = isqrt_floor(d);
  if (r * r == d) return RatInterval::exact(Rat(r));
  MpfrFloat lo(prec), hi(prec);
  mpfr_set_z(lo.get(), d.get_mpz_t(), MPFR_RNDD);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_z(hi.get(), d.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return {mpfr_to_rat(lo.get()), mpfr_to_rat(hi.get())};
}

}  // namespace mlcl
