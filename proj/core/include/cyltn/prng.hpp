#ifndef CYLTN_PRNG_HPP
#define CYLTN_PRNG_HPP

#include <cstdint>

namespace cyltn {

// SplitMix64. Small, seedable, and bit-identical on every platform, which
// keeps seeded command output and test corpora reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n >= 1. Modulo bias is irrelevant at the sizes used.
  long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

}  // namespace cyltn

#endif
