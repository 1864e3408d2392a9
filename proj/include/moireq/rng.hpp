#pragma once

#include <cmath>
#include <cstdint>

namespace moireq {

// splitmix64 generator. Chosen over <random> engines because its output is
// fully specified, so seeded runs are bit-identical across platforms and
// standard-library implementations.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in (0, 1], safe as a log argument.
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Exponential variate with the given rate (> 0).
  double exponential(double rate) { return -std::log(uniform01()) / rate; }
};

/// Independent stream for a counter (trial index) under one master seed.
inline SplitMix64 stream_for(uint64_t seed, uint64_t counter) {
  SplitMix64 mixer(seed + 0x9E3779B97F4A7C15ull * (counter + 1));
  return SplitMix64(mixer.next());
}

}  // namespace moireq
