#ifndef MLCL_INTERVAL_HPP
#define MLCL_INTERVAL_HPP

#include <string>

#include "mlcl/numeric.hpp"

namespace mlcl {

/// Certified three-way comparison of an enclosure against a threshold.
enum class Cmp { Below, Above, Straddles };

/// A rational interval [lo, hi] certified to contain an exact real value.
/// lo == hi means the value is known exactly.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw ValidationError("interval with lo > hi");
  }
  static RatInterval exact(Rat v) { return RatInterval(v, v); }

  bool is_exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval operator+(const Rat& v) const { return {lo + v, hi + v}; }
  RatInterval operator-(const Rat& v) const { return {lo - v, hi - v}; }

  RatInterval operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
      if (*v < mn) mn = *v;
      if (*v > mx) mx = *v;
    }
    return {mn, mx};
  }
  RatInterval operator*(const Rat& v) const {
    return v >= 0 ? RatInterval(lo * v, hi * v) : RatInterval(hi * v, lo * v);
  }

  /// 1/x; requires the interval to not contain 0.
  RatInterval reciprocal() const {
    if (lo <= 0 && hi >= 0) throw ValidationError("reciprocal of interval containing 0");
    return {Rat(1) / hi, Rat(1) / lo};
  }

  RatInterval abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return {-hi, -lo};
    Rat m = -lo > hi ? -lo : hi;
    return {Rat(0), m};
  }

  /// Hull of two enclosures of possibly different values.
  static RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
  }
  /// Enclosure of min of two enclosed values.
  static RatInterval min(const RatInterval& a, const RatInterval& b) {
    return {a.lo < b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
  }
  static RatInterval max(const RatInterval& a, const RatInterval& b) {
    return {a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
  }

  Cmp compare(const Rat& threshold) const {
    if (hi < threshold) return Cmp::Below;
    if (lo > threshold) return Cmp::Above;
    return Cmp::Straddles;
  }
  /// <= with certainty: Below or exact equality.
  bool certified_le(const Rat& threshold) const { return hi <= threshold; }
  bool certified_ge(const Rat& threshold) const { return lo >= threshold; }
  bool certified_lt(const Rat& threshold) const { return hi < threshold; }
  bool certified_gt(const Rat& threshold) const { return lo > threshold; }

  std::string str(int sig = 15) const;
};

/// Enclosure of the distance from x to the nearest integer, as a subset of
/// [0, 1/2]; exact when x is exact.
RatInterval torus_distance(const RatInterval& x);

/// ||p/q|| exactly.
Rat torus_distance_exact(const Rat& x);

/// x mod 1 in [0,1) for exact x.
Rat mod1(const Rat& x);

/// Torus distance between two circle points given as exact reps in [0,1).
Rat torus_gap(const Rat& a, const Rat& b);

}  // namespace mlcl

#endif  // MLCL_INTERVAL_HPP
