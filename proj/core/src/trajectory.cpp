#include "mlcl/trajectory.hpp"

#include <future>

namespace mlcl {

RatInterval mixed_term(const RealNumber& alpha, const std::optional<Int>& a,
                       const PsavSequence& D, const Int& n, const Rat& tol,
                       const PrecisionPolicy& policy) {
  if (n < 1) throw ValidationError("mixed_term: n must be >= 1");
  if (a && *a < 2) throw ValidationError("mixed_term: base a must be >= 2");
  Int a_pow = 1;
  if (a) a_pow = ipow(*a, multiplicity(n, *a));
  Valuation val = D.value(n);
  // scale = n * |n|_a * |n|_D
  Rat scale = make_rat(n, a_pow) * val.value;
  Rat dist_tol = tol / scale;
  DistResult d = alpha.dist(n, dist_tol, policy);
  return d.value * scale;
}

namespace {

// Refine one term until its enclosure is informative at its own scale
// (relative width 2^-10) or exactly zero.
RatInterval term_with_relative_width(const RealNumber& alpha, const std::optional<Int>& a,
                                     const PsavSequence& D, const Int& n,
                                     const std::optional<Rat>& fixed_tol,
                                     const PrecisionPolicy& policy) {
  if (fixed_tol) return mixed_term(alpha, a, D, n, *fixed_tol, policy);
  Rat tol(1, 1024);
  Rat floor_tol = make_rat(1, ipow2(static_cast<unsigned long>(policy.cap_bits)));
  while (true) {
    RatInterval t = mixed_term(alpha, a, D, n, tol, policy);
    if (t.hi == 0) return t;  // exact zero (rational alpha)
    if (t.width() * 1024 <= t.hi) return t;
    if (tol <= floor_tol) {
      throw PrecisionCapError("undecidable at precision cap: trajectory term at n=" + n.get_str());
    }
    tol = t.hi / 2048;
    if (tol < floor_tol) tol = floor_tol;
  }
}

struct BlockOutcome {
  Int lo, hi;
  // candidate emissions: block-local running-min improvements plus scheduled n
  std::vector<std::pair<Int, RatInterval>> candidates;
  RatInterval block_min;
  Int block_argmin;
};

BlockOutcome scan_block(const RealNumber& alpha, const std::optional<Int>& a,
                        const PsavSequence& D, Int lo, Int hi, const ScanOptions& opt) {
  BlockOutcome out;
  out.lo = lo;
  out.hi = hi;
  bool have_min = false;
  for (Int n = lo; n <= hi; n += 1) {
    RatInterval t = term_with_relative_width(alpha, a, D, n, opt.tol, opt.policy);
    bool improved = !have_min || t.hi < out.block_min.hi;
    bool scheduled = n == 1 || (opt.emit_every > 0 && mpz_divisible_ui_p(n.get_mpz_t(), opt.emit_every));
    if (improved) {
      out.block_min = have_min ? RatInterval::min(out.block_min, t) : t;
      out.block_argmin = n;
      have_min = true;
    } else {
      out.block_min = RatInterval::min(out.block_min, t);
    }
    if (improved || scheduled) out.candidates.emplace_back(n, t);
    if (t.hi == 0) break;  // the infimum is exactly attained; nothing below 0
  }
  return out;
}

}  // namespace

ScanResult infimum_scan(const RealNumber& alpha, const std::optional<Int>& a,
                        const PsavSequence& D, const Int& n_max, const ScanOptions& opt) {
  if (n_max < 1) throw ValidationError("infimum_scan: n_max must be >= 1");
  std::vector<std::pair<Int, Int>> blocks;
  Int bs(opt.block_size == 0 ? 1 : opt.block_size);
  for (Int lo = 1; lo <= n_max; lo += bs) {
    Int hi = lo + bs - 1;
    if (hi > n_max) hi = n_max;
    blocks.emplace_back(lo, hi);
  }

  std::vector<BlockOutcome> outcomes(blocks.size());
  unsigned threads = std::max(1u, opt.threads);
  if (threads == 1 || blocks.size() == 1) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      outcomes[i] = scan_block(alpha, a, D, blocks[i].first, blocks[i].second, opt);
    }
  } else {
    D.ensure_cover(n_max);  // materialize the chain before sharing it across threads
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t) {
      futs.push_back(std::async(std::launch::async, [&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= blocks.size()) break;
          outcomes[i] = scan_block(alpha, a, D, blocks[i].first, blocks[i].second, opt);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  ScanResult result;
  result.blocks = blocks;
  bool have = false;
  RatInterval runmin;
  Int argmin = 0;
  for (const auto& b : outcomes) {
    for (const auto& [n, t] : b.candidates) {
      bool improved = !have || t.hi < runmin.hi;
      bool scheduled = n == 1 || (opt.emit_every > 0 && mpz_divisible_ui_p(n.get_mpz_t(), opt.emit_every));
      if (improved) {
        runmin = have ? RatInterval::min(runmin, t) : t;
        argmin = n;
        have = true;
      }
      if (improved || scheduled) {
        result.records.push_back(TrajectoryRecord{n, t, runmin, argmin});
      }
    }
    // keep the running minimum lower bound honest across non-emitted terms
    if (have) {
      runmin = RatInterval::min(runmin, b.block_min);
      if (b.block_min.hi < runmin.hi) {  // unreachable; candidates cover improvements
        argmin = b.block_argmin;
      }
    } else {
      runmin = b.block_min;
      argmin = b.block_argmin;
      have = true;
    }
    if (runmin.hi == 0) break;
  }
  result.final_min = runmin;
  result.argmin = argmin;
  return result;
}

BadCResult bad_c_test(const RealNumber& alpha, const Rat& c, const Int& n_max,
                      const PrecisionPolicy& policy) {
  if (c <= 0) throw ValidationError("bad_c_test: c must be positive");
  if (n_max < 1) throw ValidationError("bad_c_test: n_max must be >= 1");
  for (Int n = 1; n <= n_max; n += 1) {
    Order o = alpha.order_n_dist(n, c, policy);
    if (o != Order::Greater) return {n};
  }
  return {std::nullopt};
}

}  // namespace mlcl
