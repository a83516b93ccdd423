#include "mlcl/quadratic.hpp"

namespace mlcl {

QuadraticReal::QuadraticReal(Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  if (r_ == 0) throw ValidationError("quadratic value with zero denominator");
  if (d_ < 2) throw ValidationError("quadratic field needs d >= 2");
  Int s = isqrt_floor(d_);
  if (s * s == d_) throw ValidationError("quadratic field needs non-square d");
  normalize();
}

void QuadraticReal::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadraticReal QuadraticReal::from_rat(const Rat& v, const Int& d) {
  return QuadraticReal(v.get_num(), 0, v.get_den(), d);
}

Rat QuadraticReal::as_rational() const {
  if (!is_rational()) throw ValidationError("quadratic value is irrational");
  return make_rat(p_, r_);
}

QuadraticReal QuadraticReal::operator+(const QuadraticReal& o) const {
  if (d_ != o.d_) throw ValidationError("mixed quadratic fields");
  return QuadraticReal(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, d_);
}

QuadraticReal QuadraticReal::operator-(const QuadraticReal& o) const {
  if (d_ != o.d_) throw ValidationError("mixed quadratic fields");
  return QuadraticReal(p_ * o.r_ - o.p_ * r_, q_ * o.r_ - o.q_ * r_, r_ * o.r_, d_);
}

QuadraticReal QuadraticReal::operator*(const QuadraticReal& o) const {
  if (d_ != o.d_) throw ValidationError("mixed quadratic fields");
  return QuadraticReal(p_ * o.p_ + q_ * o.q_ * d_, p_ * o.q_ + q_ * o.p_, r_ * o.r_, d_);
}

QuadraticReal QuadraticReal::operator+(const Rat& v) const {
  return QuadraticReal(p_ * v.get_den() + v.get_num() * r_, q_ * v.get_den(), r_ * v.get_den(), d_);
}

QuadraticReal QuadraticReal::operator-(const Rat& v) const { return *this + Rat(-v); }

QuadraticReal QuadraticReal::operator*(const Rat& v) const {
  return QuadraticReal(p_ * v.get_num(), q_ * v.get_num(), r_ * v.get_den(), d_);
}

QuadraticReal QuadraticReal::operator*(const Int& v) const {
  return QuadraticReal(p_ * v, q_ * v, r_, d_);
}

QuadraticReal QuadraticReal::reciprocal() const {
  // 1 / ((p + q sqrt d)/r) = r (p - q sqrt d) / (p^2 - q^2 d)
  Int norm = p_ * p_ - q_ * q_ * d_;
  if (norm == 0) throw ValidationError("reciprocal of zero quadratic value");
  return QuadraticReal(r_ * p_, -r_ * q_, norm, d_);
}

int QuadraticReal::sign() const {
  int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 with q^2 d; equality impossible (d non-square)
  int c = cmp(p_ * p_, q_ * q_ * d_);
  if (c == 0) throw ValidationError("degenerate quadratic value (square d?)");
  return sp > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

Int QuadraticReal::floor() const {
  // bracket q*sqrt(d) by integer square roots, then verify exactly
  Int s = isqrt_floor(q_ * q_ * d_);
  Int approx_num;
  if (q_ >= 0) {
    approx_num = p_ + s;
  } else {
    approx_num = p_ - s - 1;
  }
  Int n = floor_div(approx_num, r_);
  while ((*this - Rat(n)).sign() < 0) n -= 1;
  while ((*this - Rat(n + 1)).sign() >= 0) n += 1;
  return n;
}

QuadraticReal QuadraticReal::torus_distance() const {
  QuadraticReal frac = *this - Rat(floor());
  QuadraticReal other = -frac + Rat(1);
  return frac.compare(Rat(1, 2)) <= 0 ? frac : other;
}

RatInterval QuadraticReal::enclosure(mpfr_prec_t prec) const {
  RatInterval s = sqrt_enclosure(d_, prec);
  RatInterval v = s * make_rat(q_, r_) + make_rat(p_, r_);
  return v;
}

RatInterval QuadraticReal::enclosure_within(const Rat& max_width, const PrecisionPolicy& policy) const {
  if (max_width <= 0) throw ValidationError("enclosure width must be positive");
  return refine_until<RatInterval>(
      [&](mpfr_prec_t prec) -> std::optional<RatInterval> {
        RatInterval v = enclosure(prec);
        if (v.width() <= max_width) return v;
        return std::nullopt;
      },
      policy, "quadratic enclosure");
}

std::string QuadraticReal::str() const {
  return "(" + p_.get_str() + " + " + q_.get_str() + "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
}

}  // namespace mlcl
