#pragma once

#include <cmath>
#include <cstdint>

#include "ceva/rational.hpp"

namespace ceva {

/// splitmix64; a self-contained deterministic generator so reports are
/// reproducible bit-for-bit across standard libraries.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// Per-sample stream: all randomness derives from (seed, index), so sampled
/// work can be chunked or reordered without changing results.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed, std::uint64_t index = 0)
      : sm_{seed ^ (0x9E3779B97F4A7C15ULL * (index + 0x632BE59BD9B4E019ULL))} {
    sm_.next();
  }

  std::uint64_t next_u64() { return sm_.next(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(sm_.next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// 10^uniform(e_lo, e_hi).
  double log10_uniform(double e_lo, double e_hi) { return std::pow(10.0, uniform(e_lo, e_hi)); }

  long uniform_long(long lo, long hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(sm_.next() % span);
  }

  Rational rational(long max_abs_num, long max_den) {
    return Rational(uniform_long(-max_abs_num, max_abs_num), uniform_long(1, max_den));
  }

private:
  SplitMix64 sm_;
};

}  // namespace ceva
