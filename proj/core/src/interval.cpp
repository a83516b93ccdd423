#include "mlcl/interval.hpp"

namespace mlcl {

std::string RatInterval::str(int sig) const {
  if (is_exact()) return to_decimal(lo, sig);
  return "[" + to_decimal(lo, sig) + ", " + to_decimal(hi, sig) + "]";
}

Rat mod1(const Rat& x) {
  Int f = floor_div(x.get_num(), x.get_den());
  return x - Rat(f);
}

Rat torus_distance_exact(const Rat& x) {
  Rat f = mod1(x);
  Rat other = 1 - f;
  return f < other ? f : other;
}

Rat torus_gap(const Rat& a, const Rat& b) { return torus_distance_exact(a - b); }

RatInterval torus_distance(const RatInterval& x) {
  static const Rat kHalf(1, 2);
  if (x.is_exact()) return RatInterval::exact(torus_distance_exact(x.lo));
  if (x.width() >= 1) return {Rat(0), kHalf};
  // shift so the lower endpoint is in [0, 1); upper lands in [0, 2)
  Int k = floor_div(x.lo.get_num(), x.lo.get_den());
  Rat a = x.lo - Rat(k);
  Rat b = x.hi - Rat(k);
  auto dist = [&](const Rat& t) {
    // distance to nearest integer for t in [0, 2)
    if (t <= kHalf) return t;
    if (t <= 1) return Rat(1 - t);
    if (t <= Rat(3, 2)) return Rat(t - 1);
    return Rat(2 - t);
  };
  Rat da = dist(a), db = dist(b);
  Rat lo = da < db ? da : db;
  Rat hi = da > db ? da : db;
  // interior extrema: 0 at integer points, 1/2 at half-integer points
  if (a == 0 || (a <= 1 && 1 <= b)) lo = 0;
  if ((a <= kHalf && kHalf <= b) || (a <= Rat(3, 2) && Rat(3, 2) <= b)) hi = kHalf;
  return {lo, hi};
}

}  // namespace mlcl
