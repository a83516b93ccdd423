#include "mlcl/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace mlcl {

unsigned long multiplicity(const Int& n, const Int& base) {
  if (n < 1 || base < 2) throw ValidationError("multiplicity: need n >= 1, base >= 2");
  unsigned long e = 0;
  Int rest = n, q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    if (r != 0) break;
    rest = q;
    ++e;
  }
  return e;
}

long floor_log10(const Rat& x) {
  if (x == 0) throw ValidationError("floor_log10: x must be nonzero");
  Int num = abs(x.get_num());
  Int den = x.get_den();
  long dn = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10));
  long dd = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  // |x| is within a factor 10 of 10^(dn-dd); fix up by exact comparison.
  long e = dn - dd;
  auto cmp_pow10 = [&](long k) {
    // sign of |x| - 10^k
    Rat p;
    if (k >= 0) {
      p = Rat(ipow(Int(10), static_cast<unsigned long>(k)));
    } else {
      p = make_rat(1, ipow(Int(10), static_cast<unsigned long>(-k)));
    }
    Rat ax = make_rat(num, den);
    return cmp(ax, p);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;
  return e;
}

namespace {

// Round a/b to nearest integer, ties to even. a, b > 0.
Int round_half_even(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int twice = 2 * r;
  int c = cmp(twice, b);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

}  // namespace

std::string to_decimal(const Rat& x, int sig) {
  if (sig < 1) sig = 1;
  if (x == 0) return "0";
  bool neg = x < 0;
  Rat ax = rat_abs(x);
  long e = floor_log10(ax);
  // digits = round(ax * 10^(sig-1-e)), a sig-digit integer.
  long shift = sig - 1 - e;
  Int num = ax.get_num(), den = ax.get_den();
  if (shift >= 0) {
    num *= ipow(Int(10), static_cast<unsigned long>(shift));
  } else {
    den *= ipow(Int(10), static_cast<unsigned long>(-shift));
  }
  Int digits = round_half_even(num, den);
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > sig) {
    // rounding carried over (e.g. 999.9 -> 1000)
    ds.pop_back();
    ++e;
  }
  // Trim trailing zeros but keep at least one digit.
  int keep = static_cast<int>(ds.size());
  while (keep > 1 && ds[keep - 1] == '0') --keep;
  ds.resize(keep);

  std::string out;
  if (e >= -4 && e < sig + 2) {
    if (e >= 0) {
      if (static_cast<long>(ds.size()) > e) {
        out = ds.substr(0, e + 1);
        std::string frac = ds.substr(e + 1);
        if (!frac.empty()) out += "." + frac;
      } else {
        out = ds + std::string(e + 1 - ds.size(), '0');
      }
    } else {
      out = "0." + std::string(-e - 1, '0') + ds;
    }
  } else {
    out = ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + text);
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational: " + text);
  }
}

Rat parse_decimal_or_rat(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rat(text);
  auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rat(text);
  std::string ip = text.substr(0, dot);
  std::string fp = text.substr(dot + 1);
  bool neg = !ip.empty() && ip[0] == '-';
  if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip = ip.substr(1);
  if (ip.empty()) ip = "0";
  for (char ch : ip + fp) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ValidationError("malformed decimal: " + text);
    }
  }
  Int num(ip + fp);
  Int den = ipow(Int(10), fp.size());
  Rat q = make_rat(num, den);
  return neg ? Rat(-q) : q;
}

}  // namespace mlcl
