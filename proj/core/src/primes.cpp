#include "mlcl/primes.hpp"

#include <vector>

namespace mlcl {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      if (i <= n / i) {
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> phi_table(std::uint32_t n) {
  std::vector<std::uint32_t> phi(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) phi[1] = 1;
  std::vector<std::uint32_t> primes;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(i);
      phi[i] = i - 1;
    }
    for (std::uint32_t p : primes) {
      std::uint64_t m = static_cast<std::uint64_t>(p) * i;
      if (m > n) break;
      comp[m] = true;
      if (i % p == 0) {
        phi[m] = phi[i] * p;
        break;
      }
      phi[m] = phi[i] * (p - 1);
    }
    if (n == 0) break;
  }
  return phi;
}

Int primorial(std::uint64_t bound) {
  auto ps = primes_up_to(bound);
  // balanced product keeps intermediate sizes small
  std::vector<Int> vals;
  vals.reserve(ps.size());
  for (auto p : ps) vals.emplace_back(static_cast<unsigned long>(p));
  if (vals.empty()) return Int(1);
  while (vals.size() > 1) {
    std::vector<Int> next;
    next.reserve((vals.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < vals.size(); i += 2) next.push_back(vals[i] * vals[i + 1]);
    if (vals.size() % 2) next.push_back(vals.back());
    vals.swap(next);
  }
  return vals[0];
}

Rat phi_ratio_from_primes(const std::vector<Int>& primes) {
  std::vector<Rat> vals;
  vals.reserve(primes.size());
  for (const Int& p : primes) vals.push_back(make_rat(p - 1, p));
  if (vals.empty()) return Rat(1);
  while (vals.size() > 1) {
    std::vector<Rat> next;
    next.reserve((vals.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < vals.size(); i += 2) next.push_back(vals[i] * vals[i + 1]);
    if (vals.size() % 2) next.push_back(vals.back());
    vals.swap(next);
  }
  return vals[0];
}

std::optional<std::vector<Int>> distinct_prime_factors(Int n, std::uint64_t bound) {
  if (n < 1) throw ValidationError("distinct_prime_factors: n must be >= 1");
  std::vector<Int> out;
  if (n == 1) return out;
  auto ps = primes_up_to(bound);
  for (auto p : ps) {
    if (Int(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(static_cast<unsigned long>(p));
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= static_cast<unsigned long>(p);
    }
  }
  if (n > 1) {
    // remaining cofactor: prime iff <= bound^2
    Int b2 = Int(bound) * Int(bound);
    if (n <= b2) {
      out.push_back(n);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::optional<std::vector<unsigned long>> exponents_over_support(const Int& n,
                                                                 const std::vector<Int>& support) {
  Int rest = n;
  std::vector<unsigned long> exps(support.size(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    while (mpz_divisible_p(rest.get_mpz_t(), support[i].get_mpz_t())) {
      rest /= support[i];
      ++exps[i];
    }
  }
  if (rest != 1) return std::nullopt;
  return exps;
}

}  // namespace mlcl
