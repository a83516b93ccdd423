#include "mlcl/montecarlo.hpp"

#include <algorithm>
#include <future>

#include "mlcl/detail/scan_kernels.hpp"
#include "mlcl/rng.hpp"

namespace mlcl {

namespace {

enum class SolVerdict { Solution, NonSolution, Undecided };

// Certified verdict of |n|_D ||n alpha|| <= psi(n). threshold = psi(n) * nk
// on the distance side: ||n alpha|| <= psi(n) * n_k(n).
SolVerdict verdict_for(const RealNumber& alpha, std::uint64_t n, const Rat& thr_lo,
                       const Rat& thr_hi, detail::PsiScan& psi_scan, std::size_t M,
                       std::uint64_t nk, const PrecisionPolicy& policy) {
  Rat tlo = thr_lo, thi = thr_hi;
  Rat tol = thi > 0 ? Rat(thi / 16) : Rat(1, 1024);
  Rat floor_tol = make_rat(1, ipow2(static_cast<unsigned long>(policy.cap_bits)));
  mpfr_prec_t refine_prec = 256;
  while (true) {
    RatInterval d = alpha.dist(Int(n), tol, policy).value;
    if (d.hi <= tlo) return SolVerdict::Solution;
    if (d.lo > thi) return SolVerdict::NonSolution;
    // tighten both sides
    bool can_tighten = false;
    if (tol > floor_tol) {
      tol /= ipow2(8);
      if (tol < floor_tol) tol = floor_tol;
      can_tighten = true;
    }
    if (tlo != thi && refine_prec <= static_cast<mpfr_prec_t>(policy.cap_bits)) {
      RatInterval t = psi_scan.eval_refined(n, M, refine_prec) * Rat(Int(nk));
      tlo = t.lo;
      thi = t.hi;
      refine_prec *= 2;
      can_tighten = true;
    }
    if (!can_tighten) return SolVerdict::Undecided;
  }
}

struct SampleOutcome {
  std::uint64_t sub_seed;
  std::vector<std::uint64_t> counts;     // per checkpoint
  std::vector<std::uint64_t> undecided;  // per checkpoint
};

SampleOutcome run_sample(std::uint32_t index, std::uint64_t master_seed,
                         const PsavSequence& D, const PsiFunction& psi,
                         const std::vector<std::uint64_t>& cps, const PrecisionPolicy& policy) {
  SampleOutcome out;
  out.sub_seed = substream_seed(master_seed, index);
  RealNumber alpha = RealNumber::uniform_random(out.sub_seed);
  detail::ChainScan chain(D, cps.back());
  detail::PsiScan psi_scan(psi, D, 128);
  std::uint64_t count = 0, undecided = 0;
  std::size_t cp = 0;
  for (std::uint64_t n = 1; n <= cps.back(); ++n) {
    std::size_t M = chain.advance(n);
    std::uint64_t nk = chain.inv_valuation(n);
    Rat plo, phi;
    psi_scan.eval(n, M, plo, phi);
    Rat nkr(static_cast<unsigned long>(nk));
    SolVerdict v = verdict_for(alpha, n, plo * nkr, phi * nkr, psi_scan, M, nk, policy);
    if (v == SolVerdict::Solution) ++count;
    if (v == SolVerdict::Undecided) ++undecided;
    if (cp < cps.size() && n == cps[cp]) {
      out.counts.push_back(count);
      out.undecided.push_back(undecided);
      ++cp;
    }
  }
  return out;
}

}  // namespace

McReport run_mc(const McConfig& config) {
  if (config.samples < 1) throw ValidationError("run_mc: need at least one sample");
  if (config.n_max < 1) throw ValidationError("run_mc: n_max must be >= 1");
  PsavSequence D = PsavSequence::parse(config.chain_descriptor);
  PsiFunction psi = PsiFunction::parse(config.psi_descriptor);

  McReport report;
  report.config = config;
  if (config.checkpoints.empty()) {
    for (Int cp = 10; cp < config.n_max; cp *= 10) report.checkpoints.push_back(cp);
    report.checkpoints.push_back(config.n_max);
  } else {
    report.checkpoints = config.checkpoints;
    for (const Int& cp : report.checkpoints) {
      if (cp < 1 || cp > config.n_max) {
        throw ValidationError("mc checkpoints must lie in [1, n_max]");
      }
    }
  }
  std::vector<std::uint64_t> cps;
  for (const Int& cp : report.checkpoints) {
    if (!fits_u64(cp)) throw ValidationError("mc checkpoint exceeds the scan word size");
    cps.push_back(to_u64(cp));
  }

  D.ensure_cover(config.n_max);
  std::vector<SampleOutcome> outcomes(config.samples);
  unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    for (std::uint32_t s = 0; s < config.samples; ++s) {
      outcomes[s] = run_sample(s, config.seed, D, psi, cps, config.policy);
    }
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::future<void>> futs;
    for (unsigned t = 0; t < threads; ++t) {
      futs.push_back(std::async(std::launch::async, [&] {
        while (true) {
          std::uint32_t s = next.fetch_add(1);
          if (s >= config.samples) break;
          outcomes[s] = run_sample(s, config.seed, D, psi, cps, config.policy);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  for (std::uint32_t s = 0; s < config.samples; ++s) {
    for (std::size_t j = 0; j < cps.size(); ++j) {
      report.rows.push_back(McSampleRow{s, outcomes[s].sub_seed, report.checkpoints[j],
                                        outcomes[s].counts[j], outcomes[s].undecided[j]});
    }
  }

  // reference column: identical to the dichotomy-series lambda column
  SumSeries ref = dichotomy_sums(D, psi, report.checkpoints);
  report.reference = ref.columns[1].values;

  for (std::size_t j = 0; j < cps.size(); ++j) {
    std::vector<std::uint64_t> col;
    col.reserve(config.samples);
    Rat mean(0);
    for (std::uint32_t s = 0; s < config.samples; ++s) {
      col.push_back(outcomes[s].counts[j]);
      mean += Rat(static_cast<unsigned long>(outcomes[s].counts[j]));
    }
    std::sort(col.begin(), col.end());
    report.median_count.push_back(col[col.size() / 2]);
    report.mean_count.push_back(mean / Rat(config.samples));
  }

  // growth summary between the first and last checkpoints
  std::size_t grew = 0;
  for (const auto& o : outcomes) {
    if (o.counts.back() >= 2 * o.counts.front()) ++grew;
  }
  report.verdict = std::to_string(grew) + "/" + std::to_string(config.samples) +
                   " samples at least doubled their count from the first to the last checkpoint";
  return report;
}

std::vector<SolutionRecord> solution_stream(const RealNumber& alpha, const PsavSequence& D,
                                            const PsiFunction& psi, const Int& n_max,
                                            const PrecisionPolicy& policy) {
  if (n_max < 1) throw ValidationError("solution_stream: n_max must be >= 1");
  if (!fits_u64(n_max)) throw ValidationError("solution_stream: n_max exceeds scan word size");
  std::uint64_t last = to_u64(n_max);
  detail::ChainScan chain(D, last);
  detail::PsiScan psi_scan(psi, D, 128);
  std::vector<SolutionRecord> out;
  for (std::uint64_t n = 1; n <= last; ++n) {
    std::size_t M = chain.advance(n);
    std::uint64_t nk = chain.inv_valuation(n);
    Rat plo, phi;
    psi_scan.eval(n, M, plo, phi);
    Rat nkr(static_cast<unsigned long>(nk));
    SolVerdict v = verdict_for(alpha, n, plo * nkr, phi * nkr, psi_scan, M, nk, policy);
    if (v == SolVerdict::Solution) {
      Rat tol = phi > 0 ? Rat(phi * nkr / 16) : Rat(1, 1024);
      RatInterval lhs = alpha.dist(Int(n), tol, policy).value * make_rat(1, Int(nk));
      out.push_back(SolutionRecord{Int(n), lhs, RatInterval(plo, phi)});
    }
  }
  return out;
}

}  // namespace mlcl
