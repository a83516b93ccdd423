#include <doctest.h>

#include "mlcl/interval.hpp"
#include "mlcl/mpfr_util.hpp"
#include "mlcl/quadratic.hpp"
#include "mlcl/rng.hpp"

using namespace mlcl;

TEST_SUITE_BEGIN("interval");

TEST_CASE("interval arithmetic basics") {
  RatInterval a(make_rat(1, 2), Rat(1));
  RatInterval b(Rat(-1), make_rat(1, 4));
  CHECK((a + b).lo == make_rat(-1, 2));
  CHECK((a + b).hi == make_rat(5, 4));
  CHECK((a * b).lo == Rat(-1));
  CHECK((a * b).hi == make_rat(1, 4));
  CHECK((-a).hi == make_rat(-1, 2));
  CHECK(a.reciprocal().lo == Rat(1));
  CHECK(a.reciprocal().hi == Rat(2));
  CHECK_THROWS_AS(b.reciprocal(), ValidationError);
  CHECK(RatInterval::min(a, b).lo == Rat(-1));
  CHECK(RatInterval::min(a, b).hi == make_rat(1, 4));
  CHECK(a.compare(make_rat(1, 4)) == Cmp::Above);
  CHECK(a.compare(Rat(2)) == Cmp::Below);
  CHECK(a.compare(make_rat(3, 4)) == Cmp::Straddles);
  CHECK_THROWS_AS(RatInterval(Rat(1), Rat(0)), ValidationError);
}

TEST_CASE("torus distance on exact points") {
  CHECK(torus_distance_exact(make_rat(7, 3)) == make_rat(1, 3));
  CHECK(torus_distance_exact(make_rat(-1, 4)) == make_rat(1, 4));
  CHECK(torus_distance_exact(Rat(5)) == Rat(0));
  CHECK(torus_distance_exact(make_rat(1, 2)) == make_rat(1, 2));
  CHECK(torus_gap(make_rat(9, 10), make_rat(1, 10)) == make_rat(1, 5));
}

TEST_CASE("torus distance over intervals") {
  // straddles a half-integer: max clips to 1/2
  RatInterval v(make_rat(2, 5), make_rat(3, 5));
  RatInterval d = torus_distance(v);
  CHECK(d.lo == make_rat(2, 5));
  CHECK(d.hi == make_rat(1, 2));
  // straddles an integer: min clips to 0
  RatInterval w(make_rat(9, 10), make_rat(11, 10));
  RatInterval dw = torus_distance(w);
  CHECK(dw.lo == Rat(0));
  CHECK(dw.hi == make_rat(1, 10));
  // width >= 1 gives the full range
  RatInterval full = torus_distance(RatInterval(Rat(0), Rat(2)));
  CHECK(full.lo == Rat(0));
  CHECK(full.hi == make_rat(1, 2));
}

TEST_CASE("torus distance interval always contains the pointwise value") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    Int num(rng.below(10000));
    Int den(1 + rng.below(999));
    Rat lo = make_rat(num, den) - Rat(5);
    Rat width = make_rat(Int(rng.below(2000)), Int(1000));
    RatInterval x(lo, lo + width);
    RatInterval d = torus_distance(x);
    // sample interior points
    for (int s = 0; s <= 4; ++s) {
      Rat t = lo + width * make_rat(s, 4);
      Rat dist = torus_distance_exact(t);
      CHECK(d.lo <= dist);
      CHECK(dist <= d.hi);
    }
  }
}

TEST_CASE("directed log/exp/pow enclosures") {
  // 0.6931471805599453 < ln 2 < 0.6931471805599454
  RatInterval l2 = log_enclosure(Int(2), 128);
  CHECK(l2.lo < make_rat(6931471805599454LL, Int("10000000000000000")));
  CHECK(l2.hi > make_rat(6931471805599453LL, Int("10000000000000000")));
  CHECK(l2.width() < make_rat(1, Int("1000000000000000000000000000000")));
  CHECK(log_enclosure(Int(1), 64).is_exact());

  RatInterval e1 = exp_interval(RatInterval::exact(Rat(1)), 128);
  CHECK(e1.lo < make_rat(27182818284590453LL, Int("10000000000000000")));
  CHECK(e1.hi > make_rat(27182818284590452LL, Int("10000000000000000")));

  // integer exponents are exact
  RatInterval p = pow_enclosure(make_rat(3, 2), Rat(3), 64);
  CHECK(p.is_exact());
  CHECK(p.lo == make_rat(27, 8));
  // rational exponent encloses the true value: 2^(1/2)
  RatInterval s = pow_enclosure(Rat(2), make_rat(1, 2), 128);
  CHECK(s.lo * s.lo <= Rat(2));
  CHECK(s.hi * s.hi >= Rat(2));
  CHECK(s.width() < make_rat(1, Int("100000000000000000000")));

  CHECK(sqrt_enclosure(Int(4), 64).is_exact());
  CHECK(sqrt_enclosure(Int(4), 64).lo == Rat(2));
  RatInterval r5 = sqrt_enclosure(Int(5), 128);
  CHECK(r5.lo * r5.lo < Rat(5));
  CHECK(r5.hi * r5.hi > Rat(5));

  // widths shrink as precision grows
  CHECK(log_enclosure(Int(30030), 256).width() < log_enclosure(Int(30030), 64).width());
}

TEST_CASE("quadratic field exact arithmetic") {
  QuadraticReal phi = QuadraticReal::golden();
  CHECK(phi.floor() == 1);
  CHECK(phi.sign() == 1);
  // phi^2 = phi + 1
  CHECK((phi * phi).compare(phi + Rat(1)) == 0);
  // 1/phi = phi - 1
  CHECK(phi.reciprocal().compare(phi - Rat(1)) == 0);
  // ||2 phi|| = sqrt5 - 2 exactly
  QuadraticReal d2 = (phi * Int(2)).torus_distance();
  CHECK(d2.compare(QuadraticReal(-2, 1, 1, 5)) == 0);
  // ||3 phi|| = (7 - 3 sqrt5)/2 exactly
  QuadraticReal d3 = (phi * Int(3)).torus_distance();
  CHECK(d3.compare(QuadraticReal(7, -3, 2, 5)) == 0);
  // ||phi|| = 2 - phi = (3 - sqrt5)/2
  CHECK(phi.torus_distance().compare(QuadraticReal(3, -1, 2, 5)) == 0);

  QuadraticReal r2 = QuadraticReal::sqrt_of(Int(2));
  CHECK(r2.floor() == 1);
  CHECK((r2 * r2).compare(Rat(2)) == 0);
  CHECK((-r2).floor() == -2);
  CHECK((r2 - Rat(2)).sign() == -1);

  RatInterval enc = phi.enclosure_within(make_rat(1, 1000000), PrecisionPolicy{});
  CHECK(enc.width() <= make_rat(1, 1000000));
  CHECK(enc.lo < make_rat(16180340, 10000000));
  CHECK(enc.hi > make_rat(16180339, 10000000));

  CHECK_THROWS_AS(QuadraticReal(1, 1, 1, 4), ValidationError);   // square d
  CHECK_THROWS_AS(QuadraticReal(1, 1, 0, 5), ValidationError);   // zero denominator
}

TEST_SUITE_END();
