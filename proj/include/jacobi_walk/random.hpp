#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace jacobi_walk {

/// Philox4x64-10 counter-based block function (Salmon et al., Random123).
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;
PhiloxCounter philox4x64(PhiloxCounter counter, PhiloxKey key);

/// One independent substream of a seeded family. Substream s of seed k walks
/// the counters (b, 0, s, 0) for b = 0, 1, 2, ... under key (k, 0), so the
/// output depends only on (seed, stream) and never on scheduling.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream) : key_{seed, 0}, stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == buffer_.size()) refill();
    return buffer_[pos_++];
  }

  /// Uniform integer in [0, bound), bound >= 1, by multiply-and-reject
  /// (Lemire); no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  std::size_t pos_ = 4;
};

}  // namespace jacobi_walk
