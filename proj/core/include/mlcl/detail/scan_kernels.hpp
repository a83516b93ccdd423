#ifndef MLCL_DETAIL_SCAN_KERNELS_HPP
#define MLCL_DETAIL_SCAN_KERNELS_HPP

// Internal machine-word kernels shared by the sum and Monte Carlo scans.

#include <map>
#include <optional>
#include <vector>

#include "mlcl/mpfr_util.hpp"
#include "mlcl/psav.hpp"
#include "mlcl/sums.hpp"

namespace mlcl::detail {

/// Staircase walker over chain terms that fit the scanned range.
struct ChainScan {
  std::vector<std::uint64_t> terms;  // chain terms <= n_last (terms[0] = 1)
  std::size_t m_idx = 0;

  ChainScan(const PsavSequence& D, std::uint64_t n_last) {
    D.ensure_cover(Int(n_last));
    for (std::size_t k = 0; k < D.materialized(); ++k) {
      const Int& t = D.term(k);
      if (t > Int(n_last)) break;
      if (!fits_u64(t)) throw ValidationError("chain term exceeds the scan word size");
      terms.push_back(to_u64(t));
    }
  }

  /// M(n) for ascending n.
  std::size_t advance(std::uint64_t n) {
    while (m_idx + 1 < terms.size() && terms[m_idx + 1] <= n) ++m_idx;
    return m_idx;
  }

  /// M(n) for arbitrary n (binary search).
  std::size_t m_of(std::uint64_t n) const {
    std::size_t lo = 0, hi = terms.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (terms[mid] <= n) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }

  std::uint64_t inv_valuation(std::uint64_t n) const {
    std::uint64_t best = 1;
    for (std::size_t j = 1; j < terms.size(); ++j) {
      if (terms[j] > n || n % terms[j] != 0) break;
      best = terms[j];
    }
    return best;
  }
};

/// Blockwise enclosure of the non-exact psi factors; exact factors are
/// applied per n. All non-exact factors are nonincreasing in n, so a block
/// [lo, hi] is enclosed by its endpoint evaluations.
class PsiScan {
 public:
  PsiScan(const PsiFunction& psi, const PsavSequence& D, mpfr_prec_t prec)
      : psi_(psi), prec_(prec) {
    n_start_ = psi.n_start(D);
    if (!fits_u64(n_start_)) throw ValidationError("psi n_start exceeds scan range");
    if (psi.m > 0) m_at_start_ = D.counting(n_start_);
    p_exact_ = psi.p.get_den() == 1;
    m_exact_ = psi.m.get_den() == 1;
    has_block_part_ = (!p_exact_ && psi.p > 0) || psi.l > 0 || psi.e > 0;
  }

  /// Enclosure of psi(n) given M = M(n); best used with ascending n.
  void eval(std::uint64_t n, std::size_t M, Rat& out_lo, Rat& out_hi) {
    std::uint64_t nn = std::max<std::uint64_t>(n, to_u64(n_start_));
    std::size_t MM = M;
    if (nn != n && psi_.m > 0) MM = *m_at_start_;
    Rat exact = psi_.c;
    if (psi_.p > 0 && p_exact_) {
      exact /= Rat(ipow(Int(nn), psi_.p.get_num().get_ui()));
    }
    if (psi_.m > 0) {
      if (MM == 0) throw ValidationError("psi M-factor undefined before n_1");
      if (m_exact_) {
        exact /= Rat(ipow(Int(static_cast<unsigned long>(MM)), psi_.m.get_num().get_ui()));
      }
    }
    if (!has_block_part_ && (m_exact_ || psi_.m == 0)) {
      out_lo = exact;
      out_hi = exact;
      return;
    }
    Rat blo(1), bhi(1);
    if (has_block_part_) {
      ensure_block(nn);
      blo = blk_lo_val_;
      bhi = blk_hi_val_;
    }
    if (psi_.m > 0 && !m_exact_) {
      auto it = mcache_.find(MM);
      if (it == mcache_.end()) {
        RatInterval mi = pow_enclosure(Rat(static_cast<unsigned long>(MM)), -psi_.m, prec_);
        it = mcache_.emplace(MM, std::make_pair(mi.lo, mi.hi)).first;
      }
      blo *= it->second.first;
      bhi *= it->second.second;
    }
    out_lo = exact * blo;
    out_hi = exact * bhi;
  }

  /// Tighter per-n enclosure at a chosen precision (for near-tie verdicts).
  RatInterval eval_refined(std::uint64_t n, std::size_t M, mpfr_prec_t prec) const {
    std::uint64_t nn = std::max<std::uint64_t>(n, to_u64(n_start_));
    std::size_t MM = M;
    if (nn != n && psi_.m > 0) MM = *m_at_start_;
    RatInterval v = RatInterval::exact(psi_.c);
    if (psi_.p > 0) v = v * pow_enclosure(Rat(Int(nn)), -psi_.p, prec);
    if (psi_.m > 0) {
      v = v * pow_enclosure(Rat(Int(static_cast<unsigned long>(MM))), -psi_.m, prec);
    }
    if (psi_.l > 0) {
      RatInterval ln = log_enclosure(Int(nn), prec);
      v = v * pow_enclosure_interval_reciprocal(ln, psi_.l, prec);
    }
    if (psi_.e > 0) {
      RatInterval ln = log_enclosure(Int(nn), prec);
      RatInterval lln = log_interval(ln, prec);
      v = v * pow_enclosure_interval_reciprocal(lln, psi_.e, prec);
    }
    return v;
  }

 private:
  RatInterval point_value(std::uint64_t x) const {
    RatInterval v = RatInterval::exact(Rat(1));
    if (!p_exact_ && psi_.p > 0) v = v * pow_enclosure(Rat(Int(x)), -psi_.p, prec_);
    if (psi_.l > 0) {
      RatInterval ln = log_enclosure(Int(x), prec_);
      v = v * pow_enclosure_interval_reciprocal(ln, psi_.l, prec_);
    }
    if (psi_.e > 0) {
      RatInterval ln = log_enclosure(Int(x), prec_);
      RatInterval lln = log_interval(ln, prec_);
      v = v * pow_enclosure_interval_reciprocal(lln, psi_.e, prec_);
    }
    return v;
  }

  void ensure_block(std::uint64_t n) {
    if (n >= blk_lo_ && n <= blk_hi_) return;
    blk_lo_ = n;
    blk_hi_ = n + std::max<std::uint64_t>(1, n / 256);
    RatInterval at_hi = point_value(blk_hi_);
    RatInterval at_lo = point_value(blk_lo_);
    blk_lo_val_ = at_hi.lo;  // factors decrease in n
    blk_hi_val_ = at_lo.hi;
  }

  PsiFunction psi_;
  mpfr_prec_t prec_;
  Int n_start_;
  bool p_exact_ = true, m_exact_ = true, has_block_part_ = false;
  std::uint64_t blk_lo_ = 1, blk_hi_ = 0;
  Rat blk_lo_val_, blk_hi_val_;
  std::optional<std::size_t> m_at_start_;
  std::map<std::size_t, std::pair<Rat, Rat>> mcache_;
};

}  // namespace mlcl::detail

#endif  // MLCL_DETAIL_SCAN_KERNELS_HPP
