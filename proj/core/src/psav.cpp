#include "mlcl/psav.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mlcl/primes.hpp"

namespace mlcl {

namespace {

// primorial-mertens prime bound A_k = 2^(k^2); k = 5 already sieves 2^25.
constexpr std::size_t kMaxPrimorialIndex = 5;

std::uint64_t primorial_bound(std::size_t k) { return k == 0 ? 1 : (1ULL << (k * k)); }

}  // namespace

struct PsavSequence::State {
  PsavFamily family;
  std::string origin;  // descriptor echo (path for file-backed chains)
  Int geom_a;
  unsigned br_bound = 0;
  std::uint64_t br_seed = 0;
  mutable std::optional<Rng> br_rng;
  bool finite = false;
  bool prefix_semantics = false;

  mutable std::mutex mu;
  mutable std::deque<Int> terms;
  mutable std::atomic<std::size_t> count{0};

  // Appends the next term; returns false when the chain is exhausted.
  bool extend_locked() const {
    std::size_t k = terms.size();
    switch (family) {
      case PsavFamily::Geometric:
        terms.push_back(k == 0 ? Int(1) : Int(terms.back() * geom_a));
        break;
      case PsavFamily::Factorial:
        terms.push_back(k == 0 ? Int(1) : Int(terms.back() * Int(static_cast<unsigned long>(k + 1))));
        break;
      case PsavFamily::PrimorialMertens: {
        if (k > kMaxPrimorialIndex) {
          throw BudgetError("primorial-mertens term " + std::to_string(k) +
                            " exceeds the supported sieve range (k <= " +
                            std::to_string(kMaxPrimorialIndex) + ")");
        }
        terms.push_back(primorial(primorial_bound(k)));
        break;
      }
      case PsavFamily::BoundedRatio: {
        if (k == 0) {
          terms.push_back(Int(1));
        } else {
          unsigned long d = static_cast<unsigned long>(br_rng->range(2, br_bound));
          terms.push_back(Int(terms.back() * Int(d)));
        }
        break;
      }
      case PsavFamily::Explicit:
      case PsavFamily::Prefix:
        return false;  // fully materialized at construction
    }
    count.store(terms.size(), std::memory_order_release);
    return true;
  }
};

PsavSequence PsavSequence::geometric(const Int& a) {
  if (a <= 1) throw ValidationError("geometric family needs base a >= 2");
  auto st = std::make_shared<State>();
  st->family = PsavFamily::Geometric;
  st->geom_a = a;
  return PsavSequence(std::move(st));
}

PsavSequence PsavSequence::factorial() {
  auto st = std::make_shared<State>();
  st->family = PsavFamily::Factorial;
  return PsavSequence(std::move(st));
}

PsavSequence PsavSequence::primorial_mertens() {
  auto st = std::make_shared<State>();
  st->family = PsavFamily::PrimorialMertens;
  return PsavSequence(std::move(st));
}

PsavSequence PsavSequence::bounded_ratio(unsigned bound, std::uint64_t seed) {
  if (bound <= 1) throw ValidationError("bounded-ratio family needs B >= 2");
  auto st = std::make_shared<State>();
  st->family = PsavFamily::BoundedRatio;
  st->br_bound = bound;
  st->br_seed = seed;
  st->br_rng.emplace(seed);
  return PsavSequence(std::move(st));
}

namespace {

void validate_chain(const std::vector<Int>& terms) {
  if (terms.empty()) throw ValidationError("empty chain");
  if (terms[0] != 1) throw ValidationError("chain must start with n_0 = 1");
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k] <= terms[k - 1]) throw ValidationError("chain must be strictly increasing");
    if (!mpz_divisible_p(terms[k].get_mpz_t(), terms[k - 1].get_mpz_t())) {
      throw ValidationError("chain term " + terms[k].get_str() + " is not a multiple of " +
                            terms[k - 1].get_str());
    }
  }
}

}  // namespace

PsavSequence PsavSequence::explicit_chain(std::vector<Int> terms) {
  validate_chain(terms);
  auto st = std::make_shared<State>();
  st->family = PsavFamily::Explicit;
  st->finite = true;
  st->terms.assign(terms.begin(), terms.end());
  st->count.store(st->terms.size(), std::memory_order_release);
  return PsavSequence(std::move(st));
}

PsavSequence PsavSequence::prefix_chain(std::vector<Int> terms, std::string origin) {
  validate_chain(terms);
  auto st = std::make_shared<State>();
  st->family = PsavFamily::Prefix;
  st->finite = true;
  st->prefix_semantics = true;
  st->origin = std::move(origin);
  st->terms.assign(terms.begin(), terms.end());
  st->count.store(st->terms.size(), std::memory_order_release);
  return PsavSequence(std::move(st));
}

PsavSequence PsavSequence::parse(const std::string& descriptor) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
  };
  if (descriptor == "factorial") return factorial();
  if (descriptor == "primorial-mertens") return primorial_mertens();
  if (descriptor.rfind("geometric:", 0) == 0) {
    try {
      return geometric(Int(descriptor.substr(10)));
    } catch (const std::invalid_argument&) {
      throw ValidationError("malformed geometric descriptor: " + descriptor);
    }
  }
  if (descriptor.rfind("bounded-ratio:", 0) == 0) {
    auto parts = split(descriptor.substr(14), ':');
    if (parts.size() != 2) throw ValidationError("bounded-ratio needs <B>:<seed>");
    try {
      unsigned long b = std::stoul(parts[0]);
      std::uint64_t seed = std::stoull(parts[1]);
      return bounded_ratio(static_cast<unsigned>(b), seed);
    } catch (const std::exception&) {
      throw ValidationError("malformed bounded-ratio descriptor: " + descriptor);
    }
  }
  if (descriptor.rfind("explicit:", 0) == 0) {
    std::vector<Int> terms;
    for (const auto& tok : split(descriptor.substr(9), ',')) {
      try {
        terms.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw ValidationError("malformed explicit chain entry: " + tok);
      }
    }
    return explicit_chain(std::move(terms));
  }
  if (descriptor.rfind("file:", 0) == 0) {
    std::string path = descriptor.substr(5);
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open chain file: " + path);
    std::vector<Int> terms;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      try {
        terms.emplace_back(line);
      } catch (const std::invalid_argument&) {
        throw ValidationError("malformed integer in chain file: " + line);
      }
    }
    return prefix_chain(std::move(terms), path);
  }
  throw ValidationError("unknown family descriptor: " + descriptor);
}

PsavFamily PsavSequence::family() const { return st_->family; }

std::uint64_t PsavSequence::seed() const { return st_->br_seed; }

std::string PsavSequence::descriptor() const {
  switch (st_->family) {
    case PsavFamily::Geometric:
      return "geometric:" + st_->geom_a.get_str();
    case PsavFamily::Factorial:
      return "factorial";
    case PsavFamily::PrimorialMertens:
      return "primorial-mertens";
    case PsavFamily::BoundedRatio:
      return "bounded-ratio:" + std::to_string(st_->br_bound) + ":" + std::to_string(st_->br_seed);
    case PsavFamily::Explicit: {
      std::string out = "explicit:";
      for (std::size_t k = 0; k < st_->terms.size(); ++k) {
        if (k) out += ",";
        out += st_->terms[k].get_str();
      }
      return out;
    }
    case PsavFamily::Prefix:
      return "file:" + st_->origin;
  }
  return "";
}

const Int& PsavSequence::term(std::size_t k) const {
  if (k < st_->count.load(std::memory_order_acquire)) return st_->terms[k];
  std::lock_guard<std::mutex> lock(st_->mu);
  while (st_->terms.size() <= k) {
    if (!st_->extend_locked()) {
      throw SequenceTooShortError("sequence too short: term " + std::to_string(k) +
                                  " requested, only " + std::to_string(st_->terms.size()) +
                                  " available");
    }
  }
  return st_->terms[k];
}

std::size_t PsavSequence::ensure_cover(const Int& bound) const {
  {
    std::size_t c = st_->count.load(std::memory_order_acquire);
    if (c > 0 && st_->terms[c - 1] > bound) return c;
  }
  std::lock_guard<std::mutex> lock(st_->mu);
  while (st_->terms.empty() || st_->terms.back() <= bound) {
    if (!st_->extend_locked()) {
      // A hypothetical next term is at least twice the last one; if even that
      // would exceed the bound, the prefix already determines every query.
      if (st_->prefix_semantics && 2 * st_->terms.back() <= bound) {
        throw SequenceTooShortError("sequence too short: chain ends at " +
                                    st_->terms.back().get_str() + " <= " + bound.get_str());
      }
      break;  // complete finite chain: every term is known
    }
  }
  return st_->terms.size();
}

std::size_t PsavSequence::materialized() const {
  return st_->count.load(std::memory_order_acquire);
}

bool PsavSequence::is_finite() const { return st_->finite; }

Int PsavSequence::ratio(std::size_t k) const {
  if (k == 0) throw ValidationError("ratio index must be >= 1");
  return term(k) / term(k - 1);
}

Valuation PsavSequence::value(const Int& n) const {
  if (n < 1) throw ValidationError("value: n must be >= 1");
  std::size_t avail = ensure_cover(n);
  // divisibility is downward closed along the chain, so scan until the first
  // failure or until terms exceed n
  std::size_t idx = 0;
  for (std::size_t k = 1; k < avail; ++k) {
    const Int& t = st_->terms[k];
    if (t > n) break;
    if (!mpz_divisible_p(n.get_mpz_t(), t.get_mpz_t())) break;
    idx = k;
  }
  return Valuation{idx, make_rat(1, st_->terms[idx])};
}

std::size_t PsavSequence::counting(const Int& N) const {
  if (N < 1) throw ValidationError("counting: N must be >= 1");
  std::size_t avail = ensure_cover(N);
  // binary search for the last k with n_k <= N
  std::size_t lo = 0, hi = avail - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (st_->terms[mid] <= N) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

GrowthHypothesisReport PsavSequence::check_growth_hypothesis(const Rat& delta, std::size_t k_max,
                                                             const PrecisionPolicy& policy) const {
  if (delta <= 0) throw ValidationError("growth hypothesis exposed for delta > 0 only");
  if (k_max < 2) throw ValidationError("growth hypothesis needs k_max >= 2");
  if (st_->finite) {
    std::size_t last = st_->terms.size() - 1;
    if (st_->prefix_semantics && k_max > last) {
      throw SequenceTooShortError("sequence too short for growth check to k_max=" +
                                  std::to_string(k_max));
    }
    k_max = std::min(k_max, last);
  }

  GrowthHypothesisReport report;
  report.holds = true;
  bool have_worst = false;
  for (std::size_t k = 2; k <= k_max; ++k) {
    const Int& nk = term(k);
    Rat kd_exact;  // k^delta when delta is an integer
    bool verdict_le = refine_until<bool>(
        [&](mpfr_prec_t prec) -> std::optional<bool> {
          RatInterval lg = log_enclosure(nk, prec);
          RatInterval kd = pow_enclosure(Rat(static_cast<unsigned long>(k)), delta, prec);
          if (lg.hi <= kd.lo) return true;
          if (lg.lo > kd.hi) return false;
          return std::nullopt;
        },
        policy, "growth hypothesis comparison");
    if (!verdict_le) {
      report.holds = false;
      if (!report.first_failure) report.first_failure = k;
    }
    // ratio log(n_k)/k^delta at the starting precision; report-only quantity
    RatInterval lg = log_enclosure(nk, policy.start_bits);
    RatInterval kd = pow_enclosure(Rat(static_cast<unsigned long>(k)), delta, policy.start_bits);
    RatInterval ratio = lg * kd.reciprocal();
    if (!have_worst || ratio.hi > report.worst_ratio.hi) {
      report.worst_ratio = ratio;
      report.worst_k = k;
      have_worst = true;
    }
  }
  return report;
}

Int PsavSequence::max_ratio(std::size_t k_max) const {
  if (k_max < 1) throw ValidationError("max_ratio needs k_max >= 1");
  Int best = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    Int d = ratio(k);
    if (d > best) best = d;
  }
  return best;
}

std::optional<std::vector<Int>> PsavSequence::prime_support(std::uint64_t trial_bound) const {
  switch (st_->family) {
    case PsavFamily::Geometric:
      return distinct_prime_factors(st_->geom_a, trial_bound);
    case PsavFamily::Explicit:
    case PsavFamily::Prefix: {
      std::vector<Int> support;
      for (std::size_t k = 0; k < st_->terms.size(); ++k) {
        auto fs = distinct_prime_factors(st_->terms[k], trial_bound);
        if (!fs) return std::nullopt;
        for (const Int& p : *fs) {
          if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
        }
      }
      std::sort(support.begin(), support.end());
      return support;
    }
    case PsavFamily::Factorial:
    case PsavFamily::PrimorialMertens:
    case PsavFamily::BoundedRatio:
      return std::nullopt;  // support grows without bound (or is not fixed)
  }
  return std::nullopt;
}

Rat PsavSequence::term_phi_ratio(std::size_t k, std::uint64_t trial_bound) const {
  if (k == 0) return Rat(1);
  auto from_bound = [&](std::uint64_t bound) {
    std::vector<Int> ps;
    for (auto p : primes_up_to(bound)) ps.emplace_back(static_cast<unsigned long>(p));
    return phi_ratio_from_primes(ps);
  };
  switch (st_->family) {
    case PsavFamily::Geometric: {
      auto fs = distinct_prime_factors(st_->geom_a, trial_bound);
      if (!fs) {
        throw ValidationError("cannot factor geometric base " + st_->geom_a.get_str() +
                              " by trial division");
      }
      return phi_ratio_from_primes(*fs);
    }
    case PsavFamily::Factorial:
      return from_bound(k + 1);  // n_k = (k+1)!
    case PsavFamily::PrimorialMertens:
      term(k);  // range guard
      return from_bound(primorial_bound(k));
    case PsavFamily::BoundedRatio: {
      // n_k is a product of small ratios; factor those instead of n_k itself
      std::vector<Int> support;
      for (std::size_t j = 1; j <= k; ++j) {
        auto fs = distinct_prime_factors(ratio(j), st_->br_bound + 1);
        for (const Int& p : *fs) {
          if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
        }
      }
      return phi_ratio_from_primes(support);
    }
    case PsavFamily::Explicit:
    case PsavFamily::Prefix: {
      const Int& nk = term(k);
      auto fs = distinct_prime_factors(nk, trial_bound);
      if (!fs) {
        throw ValidationError("cannot factor chain term n_" + std::to_string(k) + " = " +
                              nk.get_str() + " by trial division up to " +
                              std::to_string(trial_bound));
      }
      return phi_ratio_from_primes(*fs);
    }
  }
  throw ValidationError("unreachable family");
}

}  // namespace mlcl
