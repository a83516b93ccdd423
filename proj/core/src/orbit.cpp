#include "mlcl/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "mlcl/primes.hpp"

namespace mlcl {

namespace {

// smallest integer strictly greater than 2 log a (2 log a is irrational for
// integer a >= 2, so the verdict is always decidable)
std::size_t bins_for_base(const Int& a, const PrecisionPolicy& policy) {
  return refine_until<std::size_t>(
      [&](mpfr_prec_t prec) -> std::optional<std::size_t> {
        RatInterval l = log_enclosure(a, prec) * Rat(2);
        Int flo = floor_div(l.lo.get_num(), l.lo.get_den());
        Int fhi = floor_div(l.hi.get_num(), l.hi.get_den());
        if (flo == fhi) return static_cast<std::size_t>(to_u64(flo)) + 1;
        return std::nullopt;
      },
      policy, "bin count 2 log a");
}

// exact bin of tau = frac(log_a n): the unique m with
// a^(sigma M + m) <= n^M < a^(sigma M + m + 1)
std::size_t exact_bin(const Int& n, const Int& a, const Int& sigma, std::size_t M) {
  Int nM = 1;
  mpz_pow_ui(nM.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(M));
  Int base = 1;
  mpz_pow_ui(base.get_mpz_t(), a.get_mpz_t(),
             static_cast<unsigned long>(to_u64(sigma) * M));
  std::size_t m = 0;
  Int next = base * a;
  while (m + 1 < M && next <= nM) {
    base = next;
    next = base * a;
    ++m;
  }
  return m;
}

// tau_i < tau_j  <=>  n_i a^(sigma_j) < n_j a^(sigma_i), exactly
bool tau_less(const Int& ni, const Int& si, const Int& nj, const Int& sj, const Int& a) {
  Int left = ni * ipow(a, static_cast<unsigned long>(to_u64(sj)));
  Int right = nj * ipow(a, static_cast<unsigned long>(to_u64(si)));
  if (left == right) {
    throw ValidationError("coinciding tau values: chain terms differ by a power of the base");
  }
  return left < right;
}

}  // namespace

ConstructionResult construct_chain(const ConstructionParams& params) {
  const Int& a = params.a;
  if (a < 2) throw ValidationError("construction base a must be >= 2");
  if (params.k < 2) throw ValidationError("construction needs k >= 2");
  auto support = params.D.prime_support(params.support_trial_bound);
  if (!support || support->empty()) {
    throw ValidationError("construction needs a chain with finite prime support");
  }
  for (const Int& p : *support) {
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    if (g != 1) {
      throw ValidationError("prime support must be coprime to the base: shared prime " +
                            p.get_str());
    }
  }

  ConstructionResult result;
  result.prime_support = *support;
  result.m_bins = bins_for_base(a, params.policy);
  const std::size_t M = result.m_bins;
  result.bin_counts.assign(M, 0);

  struct Entry {
    std::size_t ell;
    Int n;
    Int sigma;
    RatInterval tau;
    std::size_t bin;
    std::vector<unsigned long> exponents;
  };
  std::vector<Entry> entries;
  entries.reserve(params.k);
  Rat tau_tol = make_rat(1, Int(static_cast<unsigned long>(16 * M)));
  for (std::size_t ell = 1; ell <= params.k; ++ell) {
    const Int& n = params.D.term(ell);
    auto exps = exponents_over_support(n, *support);
    if (!exps) {
      throw ValidationError("chain term n_" + std::to_string(ell) +
                            " does not factor over the declared prime support");
    }
    FracLogResult fl = frac_log_ratio(n, a, tau_tol, params.policy);
    Entry e{ell, n, fl.sigma, fl.tau, 0, *exps};
    e.bin = exact_bin(n, a, e.sigma, M);
    result.bin_counts[e.bin] += 1;
    entries.push_back(std::move(e));
  }

  std::size_t best_bin = 0;
  for (std::size_t m = 1; m < M; ++m) {
    if (result.bin_counts[m] > result.bin_counts[best_bin]) best_bin = m;
  }
  result.bin_index = best_bin;

  std::vector<Entry> chosen;
  for (auto& e : entries) {
    if (e.bin == best_bin) chosen.push_back(std::move(e));
  }
  std::sort(chosen.begin(), chosen.end(), [&](const Entry& x, const Entry& y) {
    return tau_less(x.n, x.sigma, y.n, y.sigma, a);
  });

  Int sigma_prime = 0;
  for (const auto& e : chosen) sigma_prime = std::max(sigma_prime, e.sigma);
  result.sigma_prime = sigma_prime;

  std::vector<Int> t;
  for (const auto& e : chosen) {
    Int ti = ipow(a, static_cast<unsigned long>(to_u64(sigma_prime - e.sigma))) * e.n;
    t.push_back(ti);
    result.selected.push_back(SelectedIndex{e.ell, e.sigma, e.tau});
  }
  result.t = t;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] <= t[i - 1]) throw ValidationError("t chain failed to be strictly increasing");
  }

  // pairwise certificates and the three log forms
  RatInterval log_a = log_enclosure(a, params.report_prec);
  std::vector<RatInterval> log_p;
  for (const Int& p : *support) log_p.push_back(log_enclosure(p, params.report_prec));

  bool have_min = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      PairCheck pc;
      pc.i = i;
      pc.j = j;
      pc.ratio = make_rat(t[j], t[i]);
      Int tjM = 1, tiM = 1;
      mpz_pow_ui(tjM.get_mpz_t(), t[j].get_mpz_t(), static_cast<unsigned long>(M));
      mpz_pow_ui(tiM.get_mpz_t(), t[i].get_mpz_t(), static_cast<unsigned long>(M));
      pc.certified = t[j] > t[i] && tjM < a * tiM;
      pc.log_ratio = log_enclosure(pc.ratio, params.report_prec);
      // prime-exponent form: sum (b_j - b_i) log p_r + (sigma_i - sigma_j) log a
      RatInterval acc = RatInterval::exact(Rat(0));
      const Entry& ei = chosen[i];
      const Entry& ej = chosen[j];
      for (std::size_t r = 0; r < support->size(); ++r) {
        long diff = static_cast<long>(ej.exponents[r]) - static_cast<long>(ei.exponents[r]);
        acc = acc + log_p[r] * Rat(diff);
      }
      acc = acc + log_a * Rat(ei.sigma - ej.sigma);
      pc.log_ratio_exponents = acc;
      pc.log_ratio_tau = log_a * (ej.tau - ei.tau);
      pc.forms_agree = pc.log_ratio.overlaps(pc.log_ratio_exponents) &&
                       pc.log_ratio.overlaps(pc.log_ratio_tau) &&
                       pc.log_ratio_exponents.overlaps(pc.log_ratio_tau);
      if (j == i + 1) {
        result.min_log_ratio =
            have_min ? RatInterval::min(result.min_log_ratio, pc.log_ratio) : pc.log_ratio;
        have_min = true;
      }
      result.pairs.push_back(std::move(pc));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// linear forms in logarithms

namespace {

// minimal multiplicative root of n: the smallest r with n = r^e
Int primitive_root_of_power(const Int& n) {
  for (unsigned long e = static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2)); e >= 2;
       --e) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) return root;
  }
  return n;
}

}  // namespace

BwGapResult bw_gap(const std::vector<Int>& bases, unsigned B, std::uint64_t budget,
                   const PrecisionPolicy& policy) {
  if (bases.empty()) throw ValidationError("bw_gap needs at least one base");
  for (const Int& x : bases) {
    if (x < 2) throw ValidationError("bw_gap bases must be >= 2");
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (primitive_root_of_power(bases[i]) == primitive_root_of_power(bases[j])) {
        throw ValidationError("bases " + bases[i].get_str() + " and " + bases[j].get_str() +
                              " are powers of a common integer");
      }
    }
  }
  const std::size_t s = bases.size();
  double combos = 1;
  for (std::size_t r = 0; r < s; ++r) combos *= 2.0 * B + 1.0;
  if (combos > static_cast<double>(budget)) {
    throw BudgetError("bw_gap enumeration of " + std::to_string(static_cast<std::uint64_t>(combos)) +
                      " vectors exceeds the budget; reduce B or the number of bases");
  }

  // power tables a_r^e for e <= B
  std::vector<std::vector<Int>> pow_table(s);
  for (std::size_t r = 0; r < s; ++r) {
    pow_table[r].resize(B + 1);
    pow_table[r][0] = 1;
    for (unsigned e = 1; e <= B; ++e) pow_table[r][e] = pow_table[r][e - 1] * bases[r];
  }

  struct Best {
    Int P = 0, Q = 1;  // gap = log(P/Q), P > Q; P = 0 means empty
    std::vector<long> vec;
    bool better_than(const Int& P2, const Int& Q2) const {
      if (P == 0) return false;
      return P * Q2 < P2 * Q;  // strictly smaller ratio
    }
  };
  std::vector<Best> best_at_height(B + 1);

  std::vector<long> vec(s, -static_cast<long>(B));
  const long hi = static_cast<long>(B);
  while (true) {
    // canonical sign: first nonzero coordinate positive (the form is even)
    long first_nonzero = 0;
    for (std::size_t r = 0; r < s; ++r) {
      if (vec[r] != 0) {
        first_nonzero = vec[r];
        break;
      }
    }
    if (first_nonzero > 0) {
      long height = 0;
      Int P = 1, Q = 1;
      for (std::size_t r = 0; r < s; ++r) {
        height = std::max(height, std::labs(vec[r]));
        if (vec[r] > 0) {
          P *= pow_table[r][static_cast<unsigned>(vec[r])];
        } else if (vec[r] < 0) {
          Q *= pow_table[r][static_cast<unsigned>(-vec[r])];
        }
      }
      if (P == Q) {
        std::string v;
        for (std::size_t r = 0; r < s; ++r) v += (r ? "," : "") + std::to_string(vec[r]);
        throw ValidationError("bases are multiplicatively dependent: exact relation at (" + v +
                              ")");
      }
      if (P < Q) std::swap(P, Q);
      Best& slot = best_at_height[static_cast<std::size_t>(height)];
      bool take = slot.P == 0 || slot.better_than(P, Q) ||
                  (!(slot.better_than(P, Q)) && slot.P * Q == P * slot.Q &&
                   std::lexicographical_compare(vec.begin(), vec.end(), slot.vec.begin(),
                                                slot.vec.end()));
      if (take) {
        slot.P = P;
        slot.Q = Q;
        slot.vec = vec;
      }
    }
    // odometer
    std::size_t r = 0;
    while (r < s) {
      if (vec[r] < hi) {
        ++vec[r];
        break;
      }
      vec[r] = -hi;
      ++r;
    }
    if (r == s) break;
  }

  // running minima across heights, with enclosures
  BwGapResult result;
  Best running;
  for (unsigned h = 1; h <= B; ++h) {
    const Best& cand = best_at_height[h];
    if (cand.P != 0 && (running.P == 0 || running.better_than(cand.P, cand.Q))) {
      running = cand;
    }
    if (running.P == 0) continue;
    RatInterval gap = refine_until<RatInterval>(
        [&](mpfr_prec_t prec) -> std::optional<RatInterval> {
          RatInterval g = log_enclosure(make_rat(running.P, running.Q), prec);
          if (g.width() <= g.lo / 1024) return g;
          return std::nullopt;
        },
        policy, "bw gap log");
    result.per_height.push_back(BwGapRow{h, gap, running.vec});
  }
  if (result.per_height.empty()) throw ValidationError("bw_gap: no nonzero vectors at height 1");
  result.min_gap = result.per_height.back().min_gap;
  result.argmin = result.per_height.back().argmin;

  // fitted kappa: least exponent with gap(B') * (3B')^kappa >= 1 across all B'
  double kappa = 0.0;
  for (const auto& row : result.per_height) {
    double g = mpq_get_d(row.min_gap.lo.get_mpq_t());
    if (g < 1.0) {
      kappa = std::max(kappa, -std::log(g) / std::log(3.0 * row.height));
    }
  }
  // verify with outward rounding, nudging upward if the double estimate is shy
  auto verify = [&](double kap) {
    for (const auto& row : result.per_height) {
      MpfrFloat x(128), y(128);
      mpfr_set_ui(x.get(), 3 * row.height, MPFR_RNDD);
      mpfr_set_d(y.get(), kap, MPFR_RNDD);
      mpfr_pow(x.get(), x.get(), y.get(), MPFR_RNDD);  // (3B')^kappa, rounded down
      MpfrFloat g(128);
      mpfr_set_q(g.get(), row.min_gap.lo.get_mpq_t(), MPFR_RNDD);
      mpfr_mul(x.get(), x.get(), g.get(), MPFR_RNDD);
      if (mpfr_cmp_ui(x.get(), 1) < 0) return false;
    }
    return true;
  };
  int nudges = 0;
  while (!verify(kappa) && nudges < 64) {
    kappa *= 1.0 + 1.0 / 65536.0;
    kappa += 1e-12;
    ++nudges;
  }
  result.fitted_kappa = kappa;
  result.kappa_certified = nudges < 64;
  return result;
}

// ---------------------------------------------------------------------------
// gamma finder

namespace {

// Classifies the circle position of frac in [0, 2) against the window
// (0, eps0) around 0: +1 with beta filled (negated set for the mirror side),
// 0 when certified outside the window, -1 when the enclosure must shrink.
int classify_near_zero(const RatInterval& frac, const Rat& eps0, RatInterval& beta,
                       bool& negated) {
  if (frac.lo > 0 && frac.hi < eps0) {
    beta = frac;
    negated = false;
    return 1;
  }
  if (frac.lo > 1 && frac.hi < 1 + eps0) {
    beta = frac - Rat(1);
    negated = false;
    return 1;
  }
  if (frac.lo > 1 - eps0 && frac.hi < 1) {
    beta = RatInterval(1 - frac.hi, 1 - frac.lo);
    negated = true;
    return 1;
  }
  if (frac.lo > 2 - eps0 && frac.hi < 2) {
    beta = RatInterval(2 - frac.hi, 2 - frac.lo);
    negated = true;
    return 1;
  }
  if (frac.lo >= eps0 && frac.hi <= 1 - eps0) return 0;
  if (frac.lo >= 1 + eps0 && frac.hi <= 2 - eps0) return 0;
  return -1;
}

}  // namespace

std::optional<GammaResult> find_gamma(const RealNumber& alpha, const Int& a, const Int& t1,
                                      std::size_t budget, const PrecisionPolicy& policy) {
  if (alpha.is_rational_value()) {
    throw ValidationError("find_gamma requires irrational alpha");
  }
  if (a < 2 || t1 < 1) throw ValidationError("find_gamma needs a >= 2 and t1 >= 1");
  Rat eps0 = make_rat(1, t1 * a * a);   // target window (0, 1/(t1 a^2))
  Rat hi_target = make_rat(1, t1 * a);  // gamma < 1/(t1 a)
  Rat floor_width = make_rat(1, ipow2(static_cast<unsigned long>(policy.cap_bits)));

  for (std::size_t i = 1; i <= budget; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Int N = ipow(a, static_cast<unsigned long>(i)) - ipow(a, static_cast<unsigned long>(j));
      Rat width = eps0 / 16;
      while (true) {
        RatInterval v = alpha.enclosure(width / Rat(N), policy) * Rat(N);
        Int fl = floor_div(v.lo.get_num(), v.lo.get_den());
        RatInterval frac = v - Rat(fl);  // subset of [0, 2), width < 1
        RatInterval beta;
        bool negated = false;
        int cls = classify_near_zero(frac, eps0, beta, negated);
        if (cls == 0) break;  // certified away from 0; next pair
        if (cls == 1) {
          // gamma = a^b beta with b minimal such that gamma >= eps0; then
          // gamma < a*eps0 = 1/(t1 a) automatically once certified
          RatInterval g = beta;
          unsigned long b = 0;
          int verdict = 0;  // 1 success, -1 refine beta
          while (true) {
            if (g.lo >= eps0) {
              verdict = g.hi < hi_target ? 1 : -1;
              break;
            }
            if (g.hi < eps0) {
              g = g * Rat(a);
              ++b;
              continue;
            }
            verdict = -1;  // straddles the window edge
            break;
          }
          if (verdict == 1) return GammaResult{g, i, j, negated, b};
        }
        if (width <= floor_width) {
          throw PrecisionCapError("undecidable at precision cap: gamma candidate at i=" +
                                  std::to_string(i) + ", j=" + std::to_string(j));
        }
        width /= ipow2(32);
        if (width < floor_width) width = floor_width;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// orbit points and separated sets

std::vector<RatInterval> orbit_points(const RealNumber& alpha, const Int& a,
                                      const PsavSequence& D, std::size_t L, std::size_t K,
                                      const Rat& tol, const PrecisionPolicy& policy) {
  if (a < 2) throw ValidationError("orbit base must be >= 2");
  if (tol <= 0) throw ValidationError("orbit resolution must be positive");
  std::vector<RatInterval> pts;
  for (std::size_t k = 0; k <= K; ++k) {
    const Int& nk = D.term(k);
    for (std::size_t l = 0; l <= L; ++l) {
      Int mult = ipow(a, static_cast<unsigned long>(l)) * nk;
      RatInterval v;
      if (auto r = alpha.as_rational()) {
        v = RatInterval::exact(mod1(*r * Rat(mult)));
      } else {
        RatInterval enc = alpha.enclosure(tol / (Rat(8) * Rat(mult)), policy);
        v = enc * Rat(mult);
        Int fl = floor_div(v.lo.get_num(), v.lo.get_den());
        v = v - Rat(fl);
      }
      pts.push_back(v);
    }
  }
  std::sort(pts.begin(), pts.end(), [](const RatInterval& x, const RatInterval& y) {
    return x.midpoint() < y.midpoint();
  });
  std::vector<RatInterval> out;
  for (const auto& p : pts) {
    if (!out.empty() && p.midpoint() - out.back().midpoint() < tol) continue;
    out.push_back(p);
  }
  // wraparound: drop the last point if it collides with the first mod 1
  while (out.size() > 1 &&
         torus_gap(out.back().midpoint(), out.front().midpoint()) < tol) {
    out.pop_back();
  }
  return out;
}

SeparatedCount separated_count(const std::vector<Rat>& points, const Rat& eps) {
  if (eps <= 0) throw ValidationError("separation epsilon must be positive");
  std::vector<Rat> sorted;
  sorted.reserve(points.size());
  for (const Rat& p : points) sorted.push_back(mod1(p));
  std::sort(sorted.begin(), sorted.end());
  SeparatedCount out;
  out.epsilon = eps;
  for (const Rat& p : sorted) {
    bool ok = true;
    for (const Rat& w : out.witness) {
      if (torus_gap(p, w) < eps) {
        ok = false;
        break;
      }
    }
    if (ok) out.witness.push_back(p);
  }
  out.count = out.witness.size();
  return out;
}

SeparatedCount separated_count_enclosures(const std::vector<RatInterval>& points, const Rat& eps) {
  if (eps <= 0) throw ValidationError("separation epsilon must be positive");
  Rat quarter = eps / 4;
  for (const auto& p : points) {
    if (p.width() >= quarter) {
      throw PrecisionCapError("point enclosure too wide for separation at epsilon = " +
                              to_decimal(eps));
    }
  }
  std::vector<RatInterval> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const RatInterval& x, const RatInterval& y) {
    return x.midpoint() < y.midpoint();
  });
  SeparatedCount out;
  out.epsilon = eps;
  std::vector<RatInterval> accepted;
  for (const auto& p : sorted) {
    bool ok = true;
    for (const auto& w : accepted) {
      RatInterval gap = torus_distance(p - w);
      if (gap.hi < eps) {
        ok = false;
        break;
      }
      if (gap.lo < eps) {
        throw PrecisionCapError("pairwise separation verdict not certified; refine the points");
      }
    }
    if (ok) {
      accepted.push_back(p);
      out.witness.push_back(p.midpoint());
    }
  }
  out.count = accepted.size();
  return out;
}

std::size_t cover_upper_bound(const std::vector<Rat>& points, const Rat& eps) {
  if (eps <= 0) throw ValidationError("cover epsilon must be positive");
  std::vector<Rat> sorted;
  sorted.reserve(points.size());
  for (const Rat& p : points) sorted.push_back(mod1(p));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    Rat end = sorted[i] + eps;
    ++count;
    while (i < sorted.size() && sorted[i] < end) ++i;
  }
  return count;
}

std::vector<Rat> difference_set(const std::vector<Rat>& points) {
  std::vector<Rat> out;
  out.reserve(points.size() * points.size());
  for (const Rat& x : points) {
    for (const Rat& y : points) {
      out.push_back(mod1(x - y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BoxDimResult box_dimension_estimate(const std::vector<Rat>& points,
                                    const std::vector<Rat>& eps_grid) {
  if (eps_grid.size() < 4) throw ValidationError("box dimension grid needs >= 4 epsilons");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (eps_grid[i] <= 0) throw ValidationError("epsilons must be positive");
    if (i > 0 && eps_grid[i] >= eps_grid[i - 1]) {
      throw ValidationError("epsilon grid must be strictly decreasing");
    }
  }
  BoxDimResult out;
  std::vector<double> xs, ys;
  for (const Rat& eps : eps_grid) {
    SeparatedCount sc = separated_count(points, eps);
    out.counts.push_back({eps, sc.count});
    xs.push_back(-std::log(mpq_get_d(eps.get_mpq_t())));
    ys.push_back(std::log(static_cast<double>(std::max<std::size_t>(sc.count, 1))));
  }
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw ValidationError("degenerate epsilon grid");
  out.slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - out.slope * sx) / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.residuals.push_back(ys[i] - (out.slope * xs[i] + intercept));
  }
  return out;
}

EntropyCountResult entropy_count(const std::vector<Rat>& points, const Int& a,
                                 std::size_t n_steps, const Rat& eps) {
  if (a < 2) throw ValidationError("entropy count needs a >= 2");
  if (n_steps < 1) throw ValidationError("entropy count needs n_steps >= 1");
  if (eps <= 0) throw ValidationError("entropy epsilon must be positive");

  std::vector<Rat> sorted;
  sorted.reserve(points.size());
  for (const Rat& p : points) sorted.push_back(mod1(p));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // precompute orbits frac(a^i x)
  std::vector<std::vector<Rat>> orbit(sorted.size());
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    orbit[idx].reserve(n_steps);
    Rat x = sorted[idx];
    for (std::size_t i = 0; i < n_steps; ++i) {
      orbit[idx].push_back(x);
      x = mod1(x * Rat(a));
    }
  }

  EntropyCountResult out;
  for (std::size_t n = 1; n <= n_steps; ++n) {
    std::vector<std::size_t> accepted;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
      bool ok = true;
      for (std::size_t acc : accepted) {
        bool separated = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (torus_gap(orbit[idx][i], orbit[acc][i]) >= eps) {
            separated = true;
            break;
          }
        }
        if (!separated) {
          ok = false;
          break;
        }
      }
      if (ok) accepted.push_back(idx);
    }
    out.counts.push_back(accepted.size());
    out.log_count_over_n.push_back(
        std::log(static_cast<double>(std::max<std::size_t>(accepted.size(), 1))) /
        static_cast<double>(n));
  }
  return out;
}

}  // namespace mlcl
