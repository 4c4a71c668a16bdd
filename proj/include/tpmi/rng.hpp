#pragma once

#include <cstdint>
#include <limits>

namespace tpmi {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream keyed by (master seed, stream, substream). The n-th
/// draw is a pure function of the key and n, so any worker can regenerate any
/// realization without coordination. Satisfies UniformRandomBitGenerator.
class CounterStream {
public:
  using result_type = std::uint64_t;

  CounterStream(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t substream)
      : key_(mix64(mix64(mix64(master_seed) ^ stream) ^ (substream * 0xd1b54a32d192ed03ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix64(key_ ^ mix64(counter_++)); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace tpmi
