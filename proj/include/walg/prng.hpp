#ifndef WALG_PRNG_HPP
#define WALG_PRNG_HPP

#include <cstdint>

#include "walg/rational.hpp"

namespace walg {

/// Deterministic splitmix64 stream.  Used by every randomized property
/// check so that artifacts and test logs are reproducible from a seed.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi], inclusive.
  long rangeInt(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small rational with numerator in [-maxNum, maxNum] and denominator
  /// in [1, maxDen].
  Rat smallRat(long maxNum, long maxDen) {
    return Rat(rangeInt(-maxNum, maxNum), rangeInt(1, maxDen));
  }

 private:
  std::uint64_t state_;
};

}  // namespace walg

#endif
