#ifndef MLCL_PRIMES_HPP
#define MLCL_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mlcl/numeric.hpp"

namespace mlcl {

/// Primes <= n by Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Euler totient for all 0..n via linear sieve; phi[0] = 0, phi[1] = 1.
/// n must be < 2^32 (totients then fit uint32).
std::vector<std::uint32_t> phi_table(std::uint32_t n);

/// Product of primes <= bound (1 when bound < 2).
Int primorial(std::uint64_t bound);

/// prod (1 - 1/p) over the given primes, exact.
Rat phi_ratio_from_primes(const std::vector<Int>& primes);

/// Distinct prime factors of n by trial division with primes <= bound.
/// nullopt when a cofactor > bound^2 remains unfactored (it might be
/// composite); a cofactor c with 1 < c <= bound^2 is prime and accepted.
std::optional<std::vector<Int>> distinct_prime_factors(Int n, std::uint64_t bound);

/// Factor n over the given prime list only; nullopt if a cofactor remains.
std::optional<std::vector<unsigned long>> exponents_over_support(const Int& n,
                                                                 const std::vector<Int>& support);

}  // namespace mlcl

#endif  // MLCL_PRIMES_HPP
