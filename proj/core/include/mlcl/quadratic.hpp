#ifndef MLCL_QUADRATIC_HPP
#define MLCL_QUADRATIC_HPP

#include "mlcl/interval.hpp"
#include "mlcl/mpfr_util.hpp"

namespace mlcl {

/// Exact element (p + q*sqrt(d)) / r of the real quadratic field Q(sqrt(d)),
/// d >= 2 not a perfect square, r > 0. Supports exact sign tests and exact
/// floor, so distances ||n*alpha|| for quadratic irrationals admit exact
/// certified comparisons with no precision cap.
class QuadraticReal {
 public:
  QuadraticReal(Int p, Int q, Int r, Int d);
  static QuadraticReal from_rat(const Rat& v, const Int& d);
  static QuadraticReal sqrt_of(const Int& d) { return QuadraticReal(0, 1, 1, d); }
  /// (1 + sqrt(5)) / 2
  static QuadraticReal golden() { return QuadraticReal(1, 1, 2, 5); }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  Rat rational_part() const { return make_rat(p_, r_); }
  Rat as_rational() const;  // throws if irrational

  QuadraticReal operator+(const QuadraticReal& o) const;
  QuadraticReal operator-(const QuadraticReal& o) const;
  QuadraticReal operator*(const QuadraticReal& o) const;
  QuadraticReal operator+(const Rat& v) const;
  QuadraticReal operator-(const Rat& v) const;
  QuadraticReal operator*(const Rat& v) const;
  QuadraticReal operator*(const Int& v) const;
  QuadraticReal operator-() const { return QuadraticReal(-p_, -q_, r_, d_); }
  QuadraticReal reciprocal() const;

  /// Exact sign: -1, 0, +1.
  int sign() const;
  int compare(const QuadraticReal& o) const { return (*this - o).sign(); }
  int compare(const Rat& v) const { return (*this - v).sign(); }

  Int floor() const;
  /// Exact |x - nearest integer| (ties give 1/2 either way, same value).
  QuadraticReal torus_distance() const;
  QuadraticReal abs() const { return sign() >= 0 ? *this : -(*this); }

  RatInterval enclosure(mpfr_prec_t prec) const;
  /// Enclosure refined until width <= max_width.
  RatInterval enclosure_within(const Rat& max_width, const PrecisionPolicy& policy) const;

  std::string str() const;

 private:
  void normalize();

  Int p_, q_, r_, d_;
};

}  // namespace mlcl

#endif  // MLCL_QUADRATIC_HPP
