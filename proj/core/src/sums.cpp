#include "mlcl/sums.hpp"

#include <algorithm>
#include <sstream>

#include "mlcl/detail/scan_kernels.hpp"
#include "mlcl/mpfr_util.hpp"
#include "mlcl/primes.hpp"

namespace mlcl {

// ---------------------------------------------------------------------------
// PsiFunction

PsiFunction PsiFunction::parse(const std::string& descriptor) {
  if (descriptor.rfind("psi:", 0) != 0) {
    throw ValidationError("psi descriptor must start with 'psi:': " + descriptor);
  }
  PsiFunction f;
  std::string rest = descriptor.substr(4);
  if (rest.empty()) return f;
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("malformed psi field: " + item);
    std::string key = item.substr(0, eq);
    Rat val = parse_decimal_or_rat(item.substr(eq + 1));
    if (key == "c") {
      if (val <= 0) throw ValidationError("psi needs c > 0");
      f.c = val;
    } else if (key == "p" || key == "m" || key == "l" || key == "e") {
      if (val < 0) throw ValidationError("psi exponents must be nonnegative");
      (key == "p" ? f.p : key == "m" ? f.m : key == "l" ? f.l : f.e) = val;
    } else {
      throw ValidationError("unknown psi field: " + key);
    }
  }
  return f;
}

std::string PsiFunction::descriptor() const {
  auto rs = [](const Rat& r) {
    return r.get_den() == 1 ? r.get_num().get_str()
                            : r.get_num().get_str() + "/" + r.get_den().get_str();
  };
  return "psi:c=" + rs(c) + ",p=" + rs(p) + ",m=" + rs(m) + ",l=" + rs(l) + ",e=" + rs(e);
}

bool PsiFunction::exact_evaluable() const {
  return l == 0 && e == 0 && p.get_den() == 1 && m.get_den() == 1;
}

Int PsiFunction::n_start(const PsavSequence& D) const {
  Int start = 1;
  if (l > 0) start = std::max(start, Int(2));
  if (e > 0) start = std::max(start, Int(16));
  if (m > 0) start = std::max(start, D.term(1));
  return start;
}

Rat PsiFunction::eval_exact(const Int& n, const PsavSequence& D) const {
  if (!exact_evaluable()) {
    throw ValidationError("psi has irrational factors; use the enclosure evaluation");
  }
  if (n < 1) throw ValidationError("psi evaluated at n < 1");
  Int nn = std::max(n, n_start(D));
  Rat v = c;
  if (p > 0) v /= Rat(ipow(nn, static_cast<unsigned long>(p.get_num().get_ui())));
  if (m > 0) {
    Int M(static_cast<unsigned long>(D.counting(nn)));
    v /= Rat(ipow(M, static_cast<unsigned long>(m.get_num().get_ui())));
  }
  return v;
}

RatInterval PsiFunction::eval(const Int& n, const PsavSequence& D, mpfr_prec_t prec) const {
  if (n < 1) throw ValidationError("psi evaluated at n < 1");
  if (exact_evaluable()) return RatInterval::exact(eval_exact(n, D));
  Int nn = std::max(n, n_start(D));
  RatInterval v = RatInterval::exact(c);
  if (p > 0) v = v * pow_enclosure(Rat(nn), -p, prec);
  if (m > 0) {
    Int M(static_cast<unsigned long>(D.counting(nn)));
    v = v * pow_enclosure(Rat(M), -m, prec);
  }
  if (l > 0) {
    RatInterval ln = log_enclosure(nn, prec);
    v = v * pow_enclosure_interval_reciprocal(ln, l, prec);
  }
  if (e > 0) {
    RatInterval ln = log_enclosure(nn, prec);
    RatInterval lln = log_interval(ln, prec);
    v = v * pow_enclosure_interval_reciprocal(lln, e, prec);
  }
  return v;
}

// ---------------------------------------------------------------------------
// accumulation helpers

namespace {

using detail::ChainScan;
using detail::PsiScan;

Rat tree_reduce(std::vector<Rat>& vals) {
  if (vals.empty()) return Rat(0);
  while (vals.size() > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i + 1 < vals.size(); i += 2) vals[out++] = vals[i] + vals[i + 1];
    if (vals.size() % 2) vals[out++] = vals.back();
    vals.resize(out);
  }
  return vals[0];
}

// Exact accumulation (balanced) up to the switch point, directed dyadic
// fixed-point accumulation beyond it.
class ColumnAccumulator {
 public:
  explicit ColumnAccumulator(unsigned long fbits = 96) : f_(fbits) {}

  void add_exact(const Rat& v) {
    pending_.push_back(v);
    if (pending_.size() >= 4096) flush_pending();
  }

  void add_interval(const Rat& lo, const Rat& hi) {
    exact_ = false;
    Int t;
    mpz_mul_2exp(t.get_mpz_t(), lo.get_num().get_mpz_t(), f_);
    mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), lo.get_den().get_mpz_t());
    dlo_ += t;
    mpz_mul_2exp(t.get_mpz_t(), hi.get_num().get_mpz_t(), f_);
    mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), hi.get_den().get_mpz_t());
    dhi_ += t;
  }

  RatInterval total() {
    flush_pending();
    if (exact_) return RatInterval::exact(exact_total_);
    Rat den(ipow2(f_));
    return RatInterval(exact_total_ + make_rat(dlo_, den.get_num()),
                       exact_total_ + make_rat(dhi_, den.get_num()));
  }

  bool exact() const { return exact_; }

 private:
  void flush_pending() {
    if (pending_.empty()) return;
    Rat s = tree_reduce(pending_);
    pending_.clear();
    exact_total_ += s;
  }

  unsigned long f_;
  bool exact_ = true;
  std::vector<Rat> pending_;
  Rat exact_total_;
  Int dlo_, dhi_;
};

std::vector<std::uint64_t> checked_checkpoints(const std::vector<Int>& checkpoints) {
  if (checkpoints.empty()) throw ValidationError("need at least one checkpoint");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1) throw ValidationError("checkpoints must be >= 1");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw ValidationError("checkpoints must be strictly increasing");
    }
    if (!fits_u64(checkpoints[i])) throw ValidationError("checkpoint exceeds scan word size");
    out.push_back(to_u64(checkpoints[i]));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// exact chain sums

Int sum_inverse_valuation(const PsavSequence& D, const Int& N) {
  if (N < 1) throw ValidationError("sum_inverse_valuation: N >= 1");
  D.ensure_cover(N);
  Int total = 0;
  for (std::size_t k = 0; k < D.materialized(); ++k) {
    const Int& t = D.term(k);
    if (t > N) break;
    Int count = floor_div(N, t);
    if (k + 1 < D.materialized() && D.term(k + 1) <= N) count -= floor_div(N, D.term(k + 1));
    total += t * count;
  }
  return total;
}

Int sum_inverse_valuation_naive(const PsavSequence& D, const Int& N) {
  Int total = 0;
  for (Int n = 1; n <= N; n += 1) {
    Valuation v = D.value(n);
    total += v.value.get_den();
  }
  return total;
}

Int sum_counting(const PsavSequence& D, const Int& N) {
  if (N < 1) throw ValidationError("sum_counting: N >= 1");
  std::size_t M = D.counting(N);
  Int sum_terms = 0;
  for (std::size_t k = 1; k <= M; ++k) sum_terms += D.term(k);
  return (N + 1) * Int(static_cast<unsigned long>(M)) - sum_terms;
}

Int sum_counting_naive(const PsavSequence& D, const Int& N) {
  Int total = 0;
  for (Int n = 1; n <= N; n += 1) {
    total += static_cast<unsigned long>(D.counting(n));
  }
  return total;
}

// ---------------------------------------------------------------------------
// measures

Rat measure_An(const PsavSequence& D, const PsiFunction& psi, const Int& n) {
  Valuation val = D.value(n);
  Rat Psi = psi.eval_exact(n, D) * Rat(val.value.get_den());
  Rat two_psi = 2 * Psi;
  return two_psi >= 1 ? Rat(1) : two_psi;
}

RatInterval measure_An_enclosure(const PsavSequence& D, const PsiFunction& psi, const Int& n,
                                 mpfr_prec_t prec) {
  Valuation val = D.value(n);
  RatInterval Psi = psi.eval(n, D, prec) * Rat(val.value.get_den());
  RatInterval two = Psi * Rat(2);
  return RatInterval(two.lo > 1 ? Rat(1) : two.lo, two.hi > 1 ? Rat(1) : two.hi);
}

// ---------------------------------------------------------------------------
// dichotomy / Duffin-Schaeffer series

namespace {

// certified upper bound for the tail sum_{n>N} M(n) psi(n) by integral
// comparison; available for p = 1, m >= 1 shapes (then M(n)psi(n) is
// dominated by c / (n (log n)^l (loglog n)^e)).
std::optional<Rat> dichotomy_tail_bound(const PsiFunction& psi, std::uint64_t N,
                                        mpfr_prec_t prec) {
  if (psi.p != 1 || psi.m < 1 || N < 16) return std::nullopt;
  RatInterval ln = log_enclosure(Int(N), prec);
  RatInterval lln = log_interval(ln, prec);
  if (psi.l > 1) {
    // c * (loglog N)^-e / ((l-1) (log N)^(l-1))
    RatInterval a = pow_enclosure_interval_reciprocal(lln, psi.e, prec);
    RatInterval b = pow_enclosure_interval_reciprocal(ln, psi.l - 1, prec);
    Rat coef = psi.c / (psi.l - 1);
    return (a * b * coef).hi;
  }
  if (psi.l == 1 && psi.e > 1) {
    RatInterval a = pow_enclosure_interval_reciprocal(lln, psi.e - 1, prec);
    Rat coef = psi.c / (psi.e - 1);
    return (a * coef).hi;
  }
  return std::nullopt;
}

}  // namespace

SumSeries dichotomy_sums(const PsavSequence& D, const PsiFunction& psi,
                         const std::vector<Int>& checkpoints, const SumOptions& opt) {
  auto cps = checked_checkpoints(checkpoints);
  std::uint64_t n_last = cps.back();
  ChainScan chain(D, n_last);
  PsiScan eval(psi, D, opt.block_log_prec);
  bool exact_mode = psi.exact_evaluable();
  std::uint64_t exact_to = fits_u64(opt.exact_switch) ? to_u64(opt.exact_switch) : n_last;

  ColumnAccumulator col_mpsi, col_lambda, col_psi_inv;
  SumSeries out;
  out.checkpoints = checkpoints;
  out.exact_switch = opt.exact_switch;
  SumColumn c1{"sum_M_psi", "partial sums of M(n) psi(n)", {}, exact_mode};
  SumColumn c2{"sum_lambda_An", "partial sums of lambda(A_n(psi/|.|_D))", {}, exact_mode};
  SumColumn c3{"sum_psi_over_valuation", "partial sums of psi(n)/|n|_D", {}, exact_mode};
  SumColumn c4{"tail_bound_M_psi", "certified upper bound of the remaining tail", {}, false};


  std::size_t cp_idx = 0;
  for (std::uint64_t n = 1; n <= n_last; ++n) {
    std::size_t M = chain.advance(n);
    std::uint64_t nk = chain.inv_valuation(n);
    Rat plo, phi;
    eval.eval(n, M, plo, phi);
    bool exact_term = exact_mode && plo == phi && n <= exact_to;
    Rat Mr(static_cast<unsigned long>(M));
    Rat nkr(static_cast<unsigned long>(nk));
    // sum M(n) psi(n)
    if (exact_term) {
      col_mpsi.add_exact(plo * Mr);
    } else {
      col_mpsi.add_interval(plo * Mr, phi * Mr);
    }
    // lambda(A_n) = min(1, 2 psi(n) nk)
    Rat llo = 2 * plo * nkr, lhi = 2 * phi * nkr;
    if (llo > 1) llo = 1;
    if (lhi > 1) lhi = 1;
    if (exact_term) {
      col_lambda.add_exact(llo);
    } else {
      col_lambda.add_interval(llo, lhi);
    }
    // psi(n)/|n|_D
    if (exact_term) {
      col_psi_inv.add_exact(plo * nkr);
    } else {
      col_psi_inv.add_interval(plo * nkr, phi * nkr);
    }
    if (cp_idx < cps.size() && n == cps[cp_idx]) {
      c1.values.push_back(col_mpsi.total());
      c2.values.push_back(col_lambda.total());
      c3.values.push_back(col_psi_inv.total());
      auto tail = dichotomy_tail_bound(psi, n, opt.block_log_prec);
      c4.values.push_back(tail ? RatInterval(Rat(0), *tail)
                               : RatInterval(Rat(0), Rat(0)));
      ++cp_idx;
    }
  }
  c4.note = "certified upper bound of the remaining tail; 0 width means no bound available";
  out.columns = {c1, c2, c3, c4};
  // empirical equivalence flag: both sums growing or both flat over the grid
  if (c1.values.size() >= 2) {
    Rat g1 = c1.values.back().lo - c1.values.front().hi;
    Rat g2 = c2.values.back().lo - c2.values.front().hi;
    bool grow1 = g1 > c1.values.front().hi / 4;
    bool grow2 = g2 > c2.values.front().hi / 4;
    out.note = (grow1 == grow2) ? "columns agree (both growing or both plateauing)"
                                : "columns disagree";
  }
  return out;
}

SumSeries ds_criterion(const PsavSequence& D, const PsiFunction& psi,
                       const std::vector<Int>& checkpoints, const SumOptions& opt) {
  auto cps = checked_checkpoints(checkpoints);
  std::uint64_t n_last = cps.back();
  if (n_last > 134217728ULL) {  // totient sieve memory guard
    throw BudgetError("ds_criterion: checkpoint too large for the totient sieve");
  }
  std::vector<std::uint32_t> phi = phi_table(static_cast<std::uint32_t>(n_last));
  ChainScan chain(D, n_last);
  PsiScan eval(psi, D, opt.block_log_prec);
  bool exact_mode = psi.exact_evaluable();
  std::uint64_t exact_to = fits_u64(opt.exact_switch) ? to_u64(opt.exact_switch) : n_last;

  ColumnAccumulator col_Psi, col_phiPsi;
  SumSeries out;
  out.checkpoints = checkpoints;
  out.exact_switch = opt.exact_switch;
  SumColumn c1{"sum_Psi", "partial sums of Psi(n) = psi(n)/|n|_D", {}, exact_mode};
  SumColumn c2{"sum_phi_Psi_over_n", "partial sums of phi(n) Psi(n)/n", {}, exact_mode};
  SumColumn c3{"ratio", "column 2 over column 1", {}, exact_mode};
  SumColumn c4{"ratio_runmax", "running maximum of the ratio", {}, false};
  SumColumn c5{"ratio_runmin", "running minimum of the ratio", {}, false};

  std::optional<RatInterval> runmax, runmin;
  std::size_t cp_idx = 0;
  for (std::uint64_t n = 1; n <= n_last; ++n) {
    std::size_t M = chain.advance(n);
    std::uint64_t nk = chain.inv_valuation(n);
    Rat plo, phi_v;
    eval.eval(n, M, plo, phi_v);
    bool exact_term = exact_mode && plo == phi_v && n <= exact_to;
    Rat nkr(static_cast<unsigned long>(nk));
    Rat filo = plo * nkr, fihi = phi_v * nkr;  // Psi(n)
    Rat wlo = filo * Rat(phi[n]) / Rat(Int(n));
    Rat whi = fihi * Rat(phi[n]) / Rat(Int(n));
    if (exact_term) {
      col_Psi.add_exact(filo);
      col_phiPsi.add_exact(wlo);
    } else {
      col_Psi.add_interval(filo, fihi);
      col_phiPsi.add_interval(wlo, whi);
    }
    if (cp_idx < cps.size() && n == cps[cp_idx]) {
      RatInterval den = col_Psi.total();
      RatInterval num = col_phiPsi.total();
      RatInterval ratio = num * den.reciprocal();
      c1.values.push_back(den);
      c2.values.push_back(num);
      c3.values.push_back(ratio);
      runmax = runmax ? RatInterval::max(*runmax, ratio) : ratio;
      runmin = runmin ? RatInterval::min(*runmin, ratio) : ratio;
      c4.values.push_back(*runmax);
      c5.values.push_back(*runmin);
      ++cp_idx;
    }
  }
  out.columns = {c1, c2, c3, c4, c5};
  return out;
}

// ---------------------------------------------------------------------------
// phi sums

namespace {

Rat tree_sum_ratios(const std::vector<std::uint32_t>& phi, std::uint64_t from, std::uint64_t to,
                    std::uint64_t step, std::uint32_t skip_divisor) {
  std::vector<Rat> terms;
  terms.reserve(static_cast<std::size_t>((to - from) / step + 1));
  for (std::uint64_t n = from; n <= to; n += step) {
    if (skip_divisor && n % skip_divisor == 0) continue;
    terms.push_back(make_rat(Int(phi[n]), Int(n)));
  }
  return tree_reduce(terms);
}

}  // namespace

PhiSumResult phi_restricted_sum(std::uint32_t d, std::uint32_t N) {
  if (d < 2) throw ValidationError("phi_restricted_sum: d >= 2");
  if (N < 1) throw ValidationError("phi_restricted_sum: N >= 1");
  std::vector<std::uint32_t> phi = phi_table(N);
  Rat sum = tree_sum_ratios(phi, 1, N, 1, d);
  return {sum, sum / Rat(Int(N))};
}

PhiSweepResult phi_restricted_sweep(std::uint32_t d_lo, std::uint32_t d_hi,
                                    const std::vector<std::uint32_t>& N_grid) {
  if (d_lo < 2 || d_hi < d_lo) throw ValidationError("phi sweep needs 2 <= d_lo <= d_hi");
  if (N_grid.empty()) throw ValidationError("phi sweep needs a nonempty grid");
  for (std::size_t i = 1; i < N_grid.size(); ++i) {
    if (N_grid[i] <= N_grid[i - 1]) throw ValidationError("phi sweep grid must be increasing");
  }
  std::uint32_t N_max = N_grid.back();
  std::vector<std::uint32_t> phi = phi_table(N_max);

  // unrestricted prefix sums at grid points
  std::vector<Rat> s_all(N_grid.size());
  {
    Rat acc(0);
    std::uint64_t prev = 0;
    for (std::size_t j = 0; j < N_grid.size(); ++j) {
      acc += tree_sum_ratios(phi, prev + 1, N_grid[j], 1, 0);
      s_all[j] = acc;
      prev = N_grid[j];
    }
  }

  PhiSweepResult out;
  bool have_min = false;
  for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
    Rat acc(0);
    std::uint64_t prev = 0;
    for (std::size_t j = 0; j < N_grid.size(); ++j) {
      // multiples of d in (prev, N_grid[j]]
      std::uint64_t from = (prev / d + 1) * d;
      if (from <= N_grid[j]) acc += tree_sum_ratios(phi, from, N_grid[j], d, 0);
      Rat restricted = s_all[j] - acc;
      Rat ratio = restricted / Rat(Int(N_grid[j]));
      out.cells.push_back({d, N_grid[j], ratio});
      if (!have_min || ratio < out.min_ratio) {
        out.min_ratio = ratio;
        out.argmin_d = d;
        out.argmin_N = N_grid[j];
        have_min = true;
      }
      prev = N_grid[j];
    }
  }
  return out;
}

Rat phi_psi_sum_direct(const PsavSequence& D, const PsiFunction& psi, std::uint32_t N) {
  std::vector<std::uint32_t> phi = phi_table(N);
  ChainScan chain(D, N);
  std::vector<Rat> terms;
  terms.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    chain.advance(n);
    std::uint64_t nk = chain.inv_valuation(n);
    Rat v = psi.eval_exact(Int(n), D);
    terms.push_back(v * Rat(phi[n]) * Rat(Int(nk)) / Rat(Int(n)));
  }
  return tree_reduce(terms);
}

Rat phi_psi_sum_partial_summation(const PsavSequence& D, const PsiFunction& psi, std::uint32_t N) {
  std::vector<std::uint32_t> phi = phi_table(N);
  ChainScan chain(D, N);
  // S(n) = sum_{m<=n} phi(m)/(m |m|_D)
  Rat S(0), total(0);
  for (std::uint64_t n = 1; n <= N; ++n) {
    chain.advance(n);
    std::uint64_t nk = chain.inv_valuation(n);
    S += Rat(phi[n]) * Rat(Int(nk)) / Rat(Int(n));
    Rat dpsi = psi.eval_exact(Int(n), D) - psi.eval_exact(Int(n + 1), D);
    total += dpsi * S;
  }
  total += psi.eval_exact(Int(std::uint64_t(N) + 1), D) * S;
  return total;
}

// ---------------------------------------------------------------------------
// chain hypothesis averages

DhypReport check_Dhyp(const PsavSequence& D, const std::vector<Int>& N_grid,
                      std::uint64_t trial_bound) {
  if (N_grid.empty()) throw ValidationError("check_Dhyp needs a nonempty grid");
  DhypReport report;
  std::vector<Rat> phi_ratios;  // phi(n_k)/n_k, 1-based cache
  for (const Int& N : N_grid) {
    if (N < 1) throw ValidationError("check_Dhyp: N >= 1");
    std::size_t M = D.counting(N);
    if (M == 0) continue;
    while (phi_ratios.size() < M) {
      phi_ratios.push_back(D.term_phi_ratio(phi_ratios.size() + 1, trial_bound));
    }
    Rat sum(0);
    for (std::size_t k = 0; k < M; ++k) sum += phi_ratios[k];
    report.rows.push_back({N, M, sum / Rat(static_cast<unsigned long>(M))});
  }
  bool nonincreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].average > report.rows[i - 1].average) nonincreasing = false;
  }
  if (report.rows.size() >= 2 && nonincreasing &&
      report.rows.back().average * 2 <= report.rows.front().average) {
    report.flag = "fails";
  } else {
    report.flag = "plausibly holds";
  }
  return report;
}

}  // namespace mlcl
