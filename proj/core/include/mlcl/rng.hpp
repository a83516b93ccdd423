#ifndef MLCL_RNG_HPP
#define MLCL_RNG_HPP

#include <cstdint>
#include <random>

namespace mlcl {

/// SplitMix64 step; used to derive substream seeds from a master seed so that
/// per-sample streams are independent and the split is documented and stable.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Substream seed for stream index `idx` under `master`.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t idx) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = master ^ (0x9e3779b97f4a7c15ULL * (idx + 1));
  std::uint64_t b = splitmix64(s);
  return a ^ b ^ (idx * 0xda942042e4dd58b5ULL);
}

/// Deterministic RNG: mt19937_64 (bit-stream fixed by the standard) plus
/// unbiased bounded sampling via rejection. Distributions from <random> are
/// not byte-portable, so they are not used anywhere output-bearing.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on {0, ..., n-1}, n >= 1, unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = n * ((~0ULL) / n);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform on {lo, ..., hi} inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mlcl

#endif  // MLCL_RNG_HPP
