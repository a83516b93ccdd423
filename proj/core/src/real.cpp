#include "mlcl/real.hpp"

#include <mutex>
#include <sstream>

#include "mlcl/rng.hpp"

namespace mlcl {

// ---------------------------------------------------------------------------
// LiouvilleSchedule

LiouvilleSchedule LiouvilleSchedule::factorial() { return {Kind::Factorial, 0}; }

LiouvilleSchedule LiouvilleSchedule::power(unsigned long g) {
  if (g < 2) throw ValidationError("power schedule needs g >= 2");
  return {Kind::Power, g};
}

Int LiouvilleSchedule::exponent(std::size_t i) const {
  if (i < 1) throw ValidationError("schedule index starts at 1");
  if (kind_ == Kind::Factorial) {
    Int e = 1;
    for (std::size_t t = 2; t <= i; ++t) e *= static_cast<unsigned long>(t);
    return e;
  }
  return ipow(Int(g_), i);
}

std::string LiouvilleSchedule::str() const {
  return kind_ == Kind::Factorial ? "factorial" : "pow:" + std::to_string(g_);
}

namespace {

unsigned long exponent_as_ulong(const Int& e, const char* what) {
  if (!fits_u64(e) || to_u64(e) > (1ULL << 32)) {
    throw BudgetError(std::string(what) + ": exponent " + e.get_str() + " too large to expand");
  }
  return static_cast<unsigned long>(to_u64(e));
}

}  // namespace

// ---------------------------------------------------------------------------
// RealNumber internals

struct RealNumber::Impl {
  RealKind kind;
  std::string desc;

  Rat rat_value;
  std::optional<QuadraticReal> quad;
  std::vector<Int> explicit_quots;

  unsigned long li_base = 0;
  std::optional<LiouvilleSchedule> sched;

  std::uint64_t seed = 0;

  std::optional<Int> quotient_bound;

  mutable std::mutex mu;
  mutable std::vector<Int> quots;
  mutable std::vector<std::pair<Int, Int>> convs;  // (p_m, q_m)
  mutable std::optional<QuadraticReal> quad_rem;   // next remainder for quadratic cf
  mutable Int rand_prefix = 0;
  mutable std::size_t rand_bits = 0;
  mutable std::optional<Rng> rand_engine;
  mutable std::size_t liou_terms = 0;
  mutable Rat liou_partial;

  // ---- enclosures ----------------------------------------------------------

  void random_ensure_bits_locked(std::size_t want) const {
    while (rand_bits < want) {
      unsigned long bit = static_cast<unsigned long>(rand_engine->next_u64() & 1);
      rand_prefix = 2 * rand_prefix + bit;
      ++rand_bits;
    }
  }

  RatInterval random_enclosure(const Rat& max_width) const {
    std::size_t want = 1;
    Rat w(1, 2);
    while (w > max_width) {
      w /= 2;
      ++want;
      if (want > (1u << 24)) throw BudgetError("random real refined beyond 2^24 bits");
    }
    std::lock_guard<std::mutex> lock(mu);
    random_ensure_bits_locked(want);
    Rat den(ipow2(static_cast<unsigned long>(rand_bits)));
    Rat lo = make_rat(rand_prefix, den.get_num());
    Rat hi = make_rat(rand_prefix + 1, den.get_num());
    return {lo, hi};
  }

  RatInterval liouville_enclosure(const Rat& max_width) const {
    std::lock_guard<std::mutex> lock(mu);
    Rat base_ratio = make_rat(Int(li_base), Int(li_base) - 1);
    while (true) {
      Int e_next = sched->exponent(liou_terms + 1);
      Rat tail = base_ratio / Rat(ipow(Int(li_base), exponent_as_ulong(e_next, "liouville tail")));
      if (tail <= max_width) {
        return {liou_partial, liou_partial + tail};
      }
      // absorb the next term into the partial sum
      liou_partial += make_rat(1, ipow(Int(li_base), exponent_as_ulong(e_next, "liouville term")));
      ++liou_terms;
    }
  }

  // ---- partial quotients ----------------------------------------------------

  void rational_init_quots() {
    // finite Euclid continued fraction, canonical (last quotient >= 2 unless
    // the expansion has a single term)
    Int num = rat_value.get_num(), den = rat_value.get_den();
    while (true) {
      Int a = floor_div(num, den);
      quots.push_back(a);
      Int rem = num - a * den;
      if (rem == 0) break;
      num = den;
      den = rem;
    }
    if (quots.size() > 1 && quots.back() == 1) {
      quots.pop_back();
      quots.back() += 1;
    }
  }

  void quadratic_extend_quots_locked() const {
    if (!quad_rem) quad_rem = *quad;
    Int a = quad_rem->floor();
    quots.push_back(a);
    QuadraticReal frac = *quad_rem - Rat(a);
    quad_rem = frac.reciprocal();
  }

  // Extracts quotients 0..m from a shrinking enclosure; returns false when
  // the enclosure is still too wide to certify them.
  bool try_extract_quots(const RatInterval& enc, std::size_t m,
                         std::vector<Int>& out) const {
    out.clear();
    RatInterval x = enc;
    for (std::size_t i = 0; i <= m; ++i) {
      Int flo = floor_div(x.lo.get_num(), x.lo.get_den());
      Int fhi = floor_div(x.hi.get_num(), x.hi.get_den());
      if (flo != fhi) return false;
      out.push_back(flo);
      if (i == m) break;
      RatInterval frac(x.lo - Rat(flo), x.hi - Rat(flo));
      if (frac.lo == 0) return false;  // cannot certify the next inversion
      x = frac.reciprocal();
    }
    return true;
  }

  void stream_ensure_quots(std::size_t m, const PrecisionPolicy& policy) const {
    {
      std::lock_guard<std::mutex> lock(mu);
      if (quots.size() > m) return;
    }
    Rat width = make_rat(1, ipow2(64));
    Rat floor_width = make_rat(1, ipow2(static_cast<unsigned long>(policy.cap_bits)));
    std::vector<Int> extracted;
    while (true) {
      RatInterval enc = kind == RealKind::Liouville ? liouville_enclosure(width)
                                                    : random_enclosure(width);
      if (try_extract_quots(enc, m, extracted)) break;
      if (width <= floor_width) {
        throw PrecisionCapError("undecidable at precision cap: continued fraction of stream real");
      }
      width /= ipow2(64);
      if (width < floor_width) width = floor_width;
    }
    std::lock_guard<std::mutex> lock(mu);
    if (extracted.size() > quots.size()) quots = std::move(extracted);
  }

  void ensure_quots(std::size_t m, const PrecisionPolicy& policy) const {
    switch (kind) {
      case RealKind::Rational:
        if (m >= quots.size()) {
          throw InsufficientCfError("rational continued fraction has only " +
                                    std::to_string(quots.size()) + " quotients");
        }
        return;
      case RealKind::Quadratic: {
        std::lock_guard<std::mutex> lock(mu);
        while (quots.size() <= m) quadratic_extend_quots_locked();
        return;
      }
      case RealKind::ExplicitCf:
        if (m >= explicit_quots.size()) {
          throw InsufficientCfError("insufficient partial quotients: have " +
                                    std::to_string(explicit_quots.size()) + ", need " +
                                    std::to_string(m + 1));
        }
        return;
      case RealKind::Liouville:
      case RealKind::UniformRandom:
        stream_ensure_quots(m, policy);
        return;
    }
  }

  const Int& quotient(std::size_t m, const PrecisionPolicy& policy) const {
    ensure_quots(m, policy);
    if (kind == RealKind::ExplicitCf) return explicit_quots[m];
    return quots[m];
  }

  std::pair<Int, Int> convergent(std::size_t m, const PrecisionPolicy& policy) const {
    ensure_quots(m, policy);
    std::lock_guard<std::mutex> lock(mu);
    const std::vector<Int>& qs = kind == RealKind::ExplicitCf ? explicit_quots : quots;
    while (convs.size() <= m) {
      std::size_t i = convs.size();
      const Int& a = qs[i];
      Int p = i == 0 ? a : (i == 1 ? Int(a * convs[0].first + 1) : Int(a * convs[i - 1].first + convs[i - 2].first));
      Int q = i == 0 ? Int(1) : (i == 1 ? a : Int(a * convs[i - 1].second + convs[i - 2].second));
      convs.emplace_back(std::move(p), std::move(q));
    }
    return convs[m];
  }
};

// ---------------------------------------------------------------------------
// constructors & parsing

RealNumber RealNumber::rational(const Rat& v) {
  auto impl = std::make_shared<Impl>();
  impl->kind = RealKind::Rational;
  impl->rat_value = v;
  impl->desc = "rational:" + v.get_num().get_str() +
               (v.get_den() == 1 ? "" : "/" + v.get_den().get_str());
  impl->rational_init_quots();
  return RealNumber(std::move(impl));
}

RealNumber RealNumber::quadratic(const QuadraticReal& v) {
  if (v.is_rational()) return rational(v.as_rational());
  auto impl = std::make_shared<Impl>();
  impl->kind = RealKind::Quadratic;
  impl->quad = v;
  impl->desc = "quadratic:" + v.str();
  return RealNumber(std::move(impl));
}

RealNumber RealNumber::sqrt_of(const Int& d) {
  if (d < 0) throw ValidationError("sqrt descriptor needs d >= 0");
  Int s = isqrt_floor(d);
  if (s * s == d) return rational(Rat(s));
  RealNumber r = quadratic(QuadraticReal::sqrt_of(d));
  r.impl_->desc = "sqrt:" + d.get_str();
  return r;
}

RealNumber RealNumber::golden() {
  RealNumber r = quadratic(QuadraticReal::golden());
  r.impl_->desc = "golden";
  return r;
}

RealNumber RealNumber::explicit_cf(std::vector<Int> quotients) {
  if (quotients.empty()) throw ValidationError("continued fraction needs at least a_0");
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    if (quotients[i] < 1) throw ValidationError("partial quotients a_i (i>=1) must be >= 1");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = RealKind::ExplicitCf;
  impl->explicit_quots = std::move(quotients);
  std::string d = "cf:" + impl->explicit_quots[0].get_str();
  if (impl->explicit_quots.size() > 1) {
    d += ";";
    for (std::size_t i = 1; i < impl->explicit_quots.size(); ++i) {
      if (i > 1) d += ",";
      d += impl->explicit_quots[i].get_str();
    }
  }
  impl->desc = d;
  return RealNumber(std::move(impl));
}

RealNumber RealNumber::periodic_cf(std::vector<Int> pre, std::vector<Int> period) {
  if (pre.empty()) throw ValidationError("continued fraction needs at least a_0");
  if (period.empty()) throw ValidationError("periodic continued fraction needs a nonempty period");
  for (std::size_t i = 1; i < pre.size(); ++i) {
    if (pre[i] < 1) throw ValidationError("partial quotients a_i (i>=1) must be >= 1");
  }
  for (const Int& b : period) {
    if (b < 1) throw ValidationError("periodic partial quotients must be >= 1");
  }

  // periodic tail y = [period repeated]: y = (A y + B)/(C y + D)
  Int A = 1, B = 0, C = 0, D = 1;  // identity
  for (const Int& b : period) {
    // multiply by [[b,1],[1,0]] on the right
    Int nA = A * b + B, nB = A;
    Int nC = C * b + D, nD = C;
    A = nA;
    B = nB;
    C = nC;
    D = nD;
  }
  // C y^2 + (D - A) y - B = 0, positive root
  Int disc = (A - D) * (A - D) + 4 * B * C;
  QuadraticReal y(A - D, 1, 2 * C, disc);

  // apply the pre block
  Int P = 1, Pp = 0, Q = 0, Qp = 1;
  for (const Int& a : pre) {
    Int nP = P * a + Pp, nPp = P;
    Int nQ = Q * a + Qp, nQp = Q;
    P = nP;
    Pp = nPp;
    Q = nQ;
    Qp = nQp;
  }
  QuadraticReal num = y * Rat(P) + Rat(Pp);
  QuadraticReal den = y * Rat(Q) + Rat(Qp);
  QuadraticReal x = num * den.reciprocal();

  RealNumber r = quadratic(x);
  std::string d = "cf:" + pre[0].get_str() + ";";
  for (std::size_t i = 1; i < pre.size(); ++i) d += pre[i].get_str() + ",";
  d += "(";
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (i) d += ",";
    d += period[i].get_str();
  }
  d += ")";
  r.impl_->desc = d;
  return r;
}

RealNumber RealNumber::liouville(unsigned long base, const LiouvilleSchedule& sched) {
  if (base < 2) throw ValidationError("liouville base must be >= 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = RealKind::Liouville;
  impl->li_base = base;
  impl->sched = sched;
  impl->liou_partial = Rat(0);
  impl->desc = "liouville:" + std::to_string(base) + ":" + sched.str();
  return RealNumber(std::move(impl));
}

RealNumber RealNumber::uniform_random(std::uint64_t seed) {
  auto impl = std::make_shared<Impl>();
  impl->kind = RealKind::UniformRandom;
  impl->seed = seed;
  impl->rand_engine.emplace(seed);
  impl->desc = "random:" + std::to_string(seed);
  return RealNumber(std::move(impl));
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Int parse_int(const std::string& tok, const std::string& ctx) {
  try {
    return Int(tok);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed integer '" + tok + "' in " + ctx);
  }
}

}  // namespace

RealNumber RealNumber::parse(const std::string& d) {
  if (d == "golden") return golden();
  if (d.rfind("rational:", 0) == 0) return rational(parse_rat(d.substr(9)));
  if (d.rfind("sqrt:", 0) == 0) return sqrt_of(parse_int(d.substr(5), d));
  if (d.rfind("random:", 0) == 0) {
    try {
      return uniform_random(std::stoull(d.substr(7)));
    } catch (const std::exception&) {
      throw ValidationError("malformed random descriptor: " + d);
    }
  }
  if (d.rfind("liouville:", 0) == 0) {
    auto rest = d.substr(10);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ValidationError("liouville needs <base>:<schedule>");
    unsigned long base;
    try {
      base = std::stoul(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw ValidationError("malformed liouville base in " + d);
    }
    std::string sch = rest.substr(colon + 1);
    if (sch == "factorial") return liouville(base, LiouvilleSchedule::factorial());
    if (sch.rfind("pow:", 0) == 0) {
      try {
        return liouville(base, LiouvilleSchedule::power(std::stoul(sch.substr(4))));
      } catch (const ValidationError&) {
        throw;
      } catch (const std::exception&) {
        throw ValidationError("malformed liouville schedule in " + d);
      }
    }
    throw ValidationError("unknown liouville schedule: " + sch);
  }
  if (d.rfind("cf:", 0) == 0) {
    std::string rest = d.substr(3);
    auto semi = rest.find(';');
    std::vector<Int> pre;
    std::vector<Int> period;
    std::string head = semi == std::string::npos ? rest : rest.substr(0, semi);
    pre.push_back(parse_int(head, d));
    if (semi != std::string::npos) {
      std::string tail = rest.substr(semi + 1);
      auto open = tail.find('(');
      std::string plain = open == std::string::npos ? tail : tail.substr(0, open);
      if (open != std::string::npos) {
        auto close = tail.find(')', open);
        if (close == std::string::npos) throw ValidationError("unclosed period in " + d);
        for (const auto& tok : split_on(tail.substr(open + 1, close - open - 1), ',')) {
          if (!tok.empty()) period.push_back(parse_int(tok, d));
        }
      }
      for (const auto& tok : split_on(plain, ',')) {
        if (!tok.empty()) pre.push_back(parse_int(tok, d));
      }
    }
    if (period.empty()) return explicit_cf(std::move(pre));
    return periodic_cf(std::move(pre), std::move(period));
  }
  throw ValidationError("unknown real descriptor: " + d);
}

// ---------------------------------------------------------------------------
// queries

RealKind RealNumber::kind() const { return impl_->kind; }

std::string RealNumber::descriptor() const { return impl_->desc; }

bool RealNumber::is_rational_value() const { return impl_->kind == RealKind::Rational; }

std::optional<Rat> RealNumber::as_rational() const {
  if (impl_->kind == RealKind::Rational) return impl_->rat_value;
  return std::nullopt;
}

std::optional<QuadraticReal> RealNumber::as_quadratic() const { return impl_->quad; }

RatInterval RealNumber::enclosure(const Rat& max_width, const PrecisionPolicy& policy) const {
  if (max_width <= 0) throw ValidationError("enclosure width must be positive");
  switch (impl_->kind) {
    case RealKind::Rational:
      return RatInterval::exact(impl_->rat_value);
    case RealKind::Quadratic:
      return impl_->quad->enclosure_within(max_width, policy);
    case RealKind::ExplicitCf: {
      // alpha = (p_m y + p_{m-1})/(q_m y + q_{m-1}) over tails y > 1, so the
      // sharp bracket is between c_m and the mediant-like endpoint.
      std::size_t m = 0;
      while (true) {
        auto [pm, qm] = impl_->convergent(m, policy);
        Int pprev = m == 0 ? Int(1) : impl_->convergent(m - 1, policy).first;
        Int qprev = m == 0 ? Int(0) : impl_->convergent(m - 1, policy).second;
        Rat a = make_rat(pm, qm);
        Rat b = make_rat(pm + pprev, qm + qprev);
        RatInterval enc = a < b ? RatInterval(a, b) : RatInterval(b, a);
        if (enc.width() <= max_width) return enc;
        ++m;  // convergent() raises InsufficientCfError beyond the stream
      }
    }
    case RealKind::Liouville:
      return impl_->liouville_enclosure(max_width);
    case RealKind::UniformRandom:
      return impl_->random_enclosure(max_width);
  }
  throw ValidationError("unreachable kind");
}

Int RealNumber::partial_quotient(std::size_t m, const PrecisionPolicy& policy) const {
  return impl_->quotient(m, policy);
}

std::pair<Int, Int> RealNumber::convergent(std::size_t m, const PrecisionPolicy& policy) const {
  return impl_->convergent(m, policy);
}

std::optional<std::size_t> RealNumber::cf_length() const {
  if (impl_->kind == RealKind::Rational) return impl_->quots.size();
  if (impl_->kind == RealKind::ExplicitCf) return impl_->explicit_quots.size();
  return std::nullopt;
}

DistResult RealNumber::dist(const Int& n, const Rat& tol, const PrecisionPolicy& policy) const {
  if (n < 1) throw ValidationError("dist: n must be >= 1");
  if (tol <= 0) throw ValidationError("dist: tol must be positive");
  switch (impl_->kind) {
    case RealKind::Rational: {
      const Rat& a = impl_->rat_value;
      Int r;
      mpz_mod(r.get_mpz_t(), Int(n * a.get_num()).get_mpz_t(), a.get_den().get_mpz_t());
      Int other = a.get_den() - r;
      return {RatInterval::exact(make_rat(r < other ? r : other, a.get_den()))};
    }
    case RealKind::Quadratic:
    case RealKind::ExplicitCf: {
      // convergent certificate: |alpha - p_m/q_m| < 1/(q_m q_{m+1})
      Rat target = Rat(2) * n / tol;
      std::size_t m = 0;
      while (true) {
        auto [pm, qm] = impl_->convergent(m, policy);
        auto [pn, qn] = impl_->convergent(m + 1, policy);
        (void)pn;
        if (Rat(qm * qn) >= target) {
          Rat center = make_rat(n * pm, qm);
          Rat radius = Rat(n) / Rat(qm * qn);
          return {torus_distance(RatInterval(center - radius, center + radius))};
        }
        ++m;
      }
    }
    case RealKind::Liouville:
    case RealKind::UniformRandom: {
      Rat w = tol / (2 * Rat(n));
      RatInterval enc = enclosure(w, policy);
      return {torus_distance(enc * Rat(n))};
    }
  }
  throw ValidationError("unreachable kind");
}

Order RealNumber::order_n_dist(const Int& n, const Rat& threshold,
                               const PrecisionPolicy& policy) const {
  if (n < 1) throw ValidationError("order_n_dist: n must be >= 1");
  switch (impl_->kind) {
    case RealKind::Rational: {
      Rat v = Rat(n) * dist(n, Rat(1)).value.lo;
      int c = cmp(v, threshold);
      return c < 0 ? Order::Less : (c > 0 ? Order::Greater : Order::Equal);
    }
    case RealKind::Quadratic: {
      QuadraticReal t = ((*impl_->quad) * n).torus_distance() * n;
      int c = t.compare(threshold);
      return c < 0 ? Order::Less : (c > 0 ? Order::Greater : Order::Equal);
    }
    default: {
      Rat tol = threshold > 0 ? Rat(threshold / ipow2(10)) : Rat(1, ipow2(10));
      Rat floor_tol = make_rat(1, ipow2(static_cast<unsigned long>(policy.cap_bits)));
      while (true) {
        RatInterval v = dist(n, tol, policy).value * Rat(n);
        if (v.hi < threshold) return Order::Less;
        if (v.lo > threshold) return Order::Greater;
        if (tol <= floor_tol) {
          throw PrecisionCapError("undecidable at precision cap: n*||n*alpha|| vs threshold at n=" +
                                  n.get_str());
        }
        tol /= ipow2(16);
        if (tol < floor_tol) tol = floor_tol;
      }
    }
  }
}

std::optional<Int> RealNumber::quotient_bound() const { return impl_->quotient_bound; }

std::optional<Rat> RealNumber::bad_lower_bound() const {
  if (!impl_->quotient_bound) return std::nullopt;
  return make_rat(1, *impl_->quotient_bound + 2);
}

Int RealNumber::liouville_witness_denominator(std::size_t i) const {
  if (impl_->kind != RealKind::Liouville) {
    throw ValidationError("liouville witness only defined for liouville reals");
  }
  Int e = impl_->sched->exponent(i);
  return ipow(Int(impl_->li_base), exponent_as_ulong(e, "liouville witness"));
}

RatInterval RealNumber::liouville_witness(std::size_t i) const {
  if (impl_->kind != RealKind::Liouville) {
    throw ValidationError("liouville witness only defined for liouville reals");
  }
  const Int b(impl_->li_base);
  Int ei = impl_->sched->exponent(i);
  Int en = impl_->sched->exponent(i + 1);
  Int ni = liouville_witness_denominator(i);
  // frac(n_i * alpha) = sum_{j>i} b^(e_i - e_j) in (b^(e_i-e_{i+1}), b/(b-1) * b^(e_i-e_{i+1})]
  Int gap = en - ei;
  Rat first = make_rat(1, ipow(b, exponent_as_ulong(gap, "liouville witness tail")));
  Rat tail_hi = first * make_rat(b, b - 1);
  RatInterval frac(first, tail_hi);
  return torus_distance(frac) * Rat(ni);
}

// ---------------------------------------------------------------------------
// make_bad / make_well / frac_log_ratio

RealNumber make_bad(const std::vector<Int>& pre, const std::vector<Int>& period,
                    std::optional<Int> declared_bound) {
  if (period.empty()) {
    throw ValidationError(
        "badly approximable numbers are irrational: a terminating continued fraction is rational");
  }
  for (const Int& a : period) {
    if (a < 1) throw ValidationError("partial quotients must be positive");
  }
  for (std::size_t i = 1; i < pre.size(); ++i) {
    if (pre[i] < 1) throw ValidationError("partial quotients must be positive");
  }
  Int max_q = 1;
  for (const Int& a : period) max_q = std::max(max_q, a);
  for (std::size_t i = 1; i < pre.size(); ++i) max_q = std::max(max_q, pre[i]);
  Int bound = declared_bound.value_or(max_q);
  if (bound < max_q) {
    throw ValidationError("declared quotient bound " + bound.get_str() +
                          " below actual maximum " + max_q.get_str());
  }
  RealNumber r = RealNumber::periodic_cf(pre, period);
  r.impl_->quotient_bound = bound;
  return r;
}

RealNumber make_well(unsigned long base, const LiouvilleSchedule& sched) {
  return RealNumber::liouville(base, sched);
}

FracLogResult frac_log_ratio(const Int& m, const Int& a, const Rat& tol,
                             const PrecisionPolicy& policy) {
  if (m < 1) throw ValidationError("frac_log_ratio: m must be >= 1");
  if (a < 2) throw ValidationError("frac_log_ratio: a must be >= 2");
  if (tol <= 0) throw ValidationError("frac_log_ratio: tol must be positive");
  Int sigma = 0;
  Int power = 1;
  while (power * a <= m) {
    power *= a;
    sigma += 1;
  }
  if (power == m) {
    return {sigma, RatInterval::exact(Rat(0)), true};
  }
  RatInterval tau = refine_until<RatInterval>(
      [&](mpfr_prec_t prec) -> std::optional<RatInterval> {
        RatInterval lm = log_enclosure(m, prec);
        RatInterval la = log_enclosure(a, prec);
        RatInterval ratio = lm * la.reciprocal();
        RatInterval t = ratio - Rat(sigma);
        if (t.lo < 0) t.lo = 0;
        if (t.hi > 1) t.hi = 1;
        if (t.width() <= tol) return t;
        return std::nullopt;
      },
      policy, "frac_log_ratio");
  return {sigma, tau, false};
}

}  // namespace mlcl
