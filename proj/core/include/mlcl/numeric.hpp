#ifndef MLCL_NUMERIC_HPP
#define MLCL_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mlcl {

using Int = mpz_class;
using Rat = mpq_class;

// Exit-code classes used by the CLI: 1 validation, 2 precision cap, 3 budget.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SequenceTooShortError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InsufficientCfError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PrecisionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int ipow2(unsigned long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_power_of(const Int& n, const Int& base, unsigned long* exp_out = nullptr) {
  if (n < 1 || base < 2) return false;
  Int v = 1;
  unsigned long e = 0;
  while (v < n) {
    v *= base;
    ++e;
  }
  if (v == n) {
    if (exp_out) *exp_out = e;
    return true;
  }
  return false;
}

inline bool fits_u64(const Int& n) { return n >= 0 && mpz_fits_ulong_p(n.get_mpz_t()); }

inline std::uint64_t to_u64(const Int& n) { return mpz_get_ui(n.get_mpz_t()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Largest e with base^e dividing n (n >= 1, base >= 2).
unsigned long multiplicity(const Int& n, const Int& base);

/// floor(log10(|x|)) for x != 0, exact.
long floor_log10(const Rat& x);

/// Deterministic decimal rendering of an exact rational: round-half-even at
/// `sig` significant digits, fixed notation for moderate exponents and
/// scientific otherwise. Terminating decimals that fit are rendered exactly.
std::string to_decimal(const Rat& x, int sig = 15);

/// Parse "p/q" or "p"; throws ValidationError on malformed input or q == 0.
Rat parse_rat(const std::string& text);

/// Parse an optionally signed decimal like "0.25" or "-3" into an exact Rat.
Rat parse_decimal_or_rat(const std::string& text);

}  // namespace mlcl

#endif  // MLCL_NUMERIC_HPP
