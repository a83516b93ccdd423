#include <doctest.h>

#include <set>

#include "mlcl/numeric.hpp"
#include "mlcl/primes.hpp"
#include "mlcl/rng.hpp"
#include "mlcl/sha256.hpp"

using namespace mlcl;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("decimal rendering is deterministic and exact where it can be") {
  CHECK(to_decimal(Rat(0)) == "0");
  CHECK(to_decimal(make_rat(1, 8), 6) == "0.125");
  CHECK(to_decimal(make_rat(1, 3), 6) == "0.333333");
  CHECK(to_decimal(make_rat(-1, 3), 6) == "-0.333333");
  CHECK(to_decimal(Rat(42), 6) == "42");
  CHECK(to_decimal(make_rat(1, 1000000000), 3) == "1e-9");
  CHECK(to_decimal(make_rat(1234567, 1000), 15) == "1234.567");
  // round half to even
  CHECK(to_decimal(make_rat(25, 10), 1) == "2");
  CHECK(to_decimal(make_rat(35, 10), 1) == "4");
  // rounding carry: 0.999 at 2 digits -> 1
  CHECK(to_decimal(make_rat(999, 1000), 2) == "1");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_decimal_or_rat("0.25") == make_rat(1, 4));
  CHECK(parse_decimal_or_rat("-1.5") == make_rat(-3, 2));
  CHECK(parse_decimal_or_rat("9/10") == make_rat(9, 10));
  CHECK_THROWS_AS(parse_rat("x"), ValidationError);
  CHECK_THROWS_AS(parse_rat("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_decimal_or_rat("1.2.3"), ValidationError);
}

TEST_CASE("floor_log10 and multiplicity") {
  CHECK(floor_log10(Rat(999)) == 2);
  CHECK(floor_log10(Rat(1000)) == 3);
  CHECK(floor_log10(make_rat(1, 1000)) == -3);
  CHECK(floor_log10(make_rat(999, 1000)) == -1);
  CHECK(multiplicity(Int(12), Int(2)) == 2);
  CHECK(multiplicity(Int(12), Int(3)) == 1);
  CHECK(multiplicity(Int(1), Int(5)) == 0);
  CHECK(multiplicity(Int(81), Int(3)) == 4);
}

TEST_CASE("sha256 FIPS vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  // streaming equals one-shot
  Sha256 s;
  std::string long_input(1000, 'a');
  for (int i = 0; i < 1000; ++i) s.update(long_input.data(), 1);
  CHECK(s.hex_digest() == sha256_hex(long_input));
}

TEST_CASE("rng substreams are deterministic and unbiased in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(substream_seed(1, 0) != substream_seed(1, 1));
  CHECK(substream_seed(1, 0) == substream_seed(1, 0));
  CHECK(substream_seed(1, 5) != substream_seed(2, 5));
  Rng c(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 400; ++i) {
    std::uint64_t v = c.range(2, 5);
    CHECK(v >= 2);
    CHECK(v <= 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 4);  // all of {2,3,4,5} hit
}

TEST_CASE("prime sieves against trial division") {
  auto ps = primes_up_to(16);
  CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  CHECK(primorial(16) == 30030);
  CHECK(primorial(1) == 1);
  CHECK(primorial(2) == 2);

  auto phi = phi_table(300);
  auto phi_naive = [](std::uint32_t n) {
    std::uint32_t count = 0;
    for (std::uint32_t k = 1; k <= n; ++k) {
      std::uint32_t a = n, b = k;
      while (b) {
        std::uint32_t t = a % b;
        a = b;
        b = t;
      }
      if (a == 1) ++count;
    }
    return count;
  };
  for (std::uint32_t n = 1; n <= 300; ++n) CHECK(phi[n] == phi_naive(n));
}

TEST_CASE("phi ratio products and factoring") {
  std::vector<Int> ps{2, 3, 5, 7, 11, 13};
  // 1152/6006 in lowest terms
  CHECK(phi_ratio_from_primes(ps) == make_rat(192, 1001));
  auto fs = distinct_prime_factors(Int(360), 100);
  REQUIRE(fs.has_value());
  CHECK(*fs == std::vector<Int>{2, 3, 5});
  // large prime cofactor within bound^2 is accepted
  auto f2 = distinct_prime_factors(Int(2) * 9973, 100);
  REQUIRE(f2.has_value());
  CHECK(*f2 == std::vector<Int>{2, 9973});
  // cofactor beyond bound^2 is rejected
  CHECK_FALSE(distinct_prime_factors(Int("1000000007") * Int("1000000009"), 100).has_value());

  auto exps = exponents_over_support(Int(108), {Int(2), Int(3)});
  REQUIRE(exps.has_value());
  CHECK(*exps == std::vector<unsigned long>{2, 3});
  CHECK_FALSE(exponents_over_support(Int(10), {Int(2), Int(3)}).has_value());
}

TEST_SUITE_END();
