#pragma once

#include <cmath>
#include <cstdint>

namespace fkwalk {

/// Identifies one sample's random stream. The stream is a pure function of
/// (master_seed, sample_index); worker assignment never enters.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based generator: the k-th draw of a stream is a hash of
/// (master_seed, sample_index, k). Streams can be evaluated out of order
/// and in parallel with identical results.
class CounterRng {
 public:
  explicit CounterRng(SeedSpec seed)
      : key_(detail::mix64(detail::mix64(seed.master_seed) ^ seed.sample_index)) {}

  std::uint64_t next_u64() { return detail::mix64(key_ ^ counter_++); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1].
  double next_double_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Fair coin: +1 or -1.
  int next_sign() { return (next_u64() & 1u) ? 1 : -1; }

  /// Uniform integer in [0, bound), rejection-sampled to kill modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Standard normal via Box-Muller (consumes two draws).
  double next_normal() {
    const double u1 = next_double_open();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace fkwalk
