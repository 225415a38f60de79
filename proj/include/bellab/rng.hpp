#pragma once

// Counter-based randomness: every draw is a pure function of
// (seed, stream, pair index, draw slot), so pair generation can be split
// across threads or blocks in any order and still reproduce bit-for-bit.

#include <cstdint>

namespace bellab::rng {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Named substreams, so different uses of the same pair index never share bits.
enum class Stream : std::uint64_t {
  HiddenVariable = 1,
  SourceSign = 2,
  JointFlip = 3,
  PreparedE = 4,
  PreparedEPrime = 5,
  Prepared = 6,
};

constexpr std::uint64_t draw_bits(std::uint64_t seed, Stream stream, std::uint64_t pair_index,
                                  std::uint64_t slot = 0) noexcept {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ static_cast<std::uint64_t>(stream) * 0xD6E8FEB86659FD93ull);
  h = mix64(h ^ pair_index);
  return mix64(h + slot);
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double uniform(std::uint64_t seed, Stream stream, std::uint64_t pair_index,
                         std::uint64_t slot = 0) noexcept {
  return to_unit(draw_bits(seed, stream, pair_index, slot));
}

/// Fair ±1 from the top bit.
constexpr int fair_sign(std::uint64_t seed, Stream stream, std::uint64_t pair_index) noexcept {
  return (draw_bits(seed, stream, pair_index) >> 63) ? 1 : -1;
}

}  // namespace bellab::rng
