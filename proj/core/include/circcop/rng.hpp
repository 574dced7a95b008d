#pragma once

#include <cstdint>
#include <random>

namespace circcop {

/// SplitMix64 output function; used to derive seeds, never as a stream itself.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seedable, splittable 64-bit generator.
///
/// Identity: std::mt19937_64 seeded with splitmix64(seed). Uniform doubles are
/// the top 53 bits of each output times 2^-53, so streams are bit-identical
/// across standard libraries (std::uniform_real_distribution is not).
/// substream(k) is a fresh generator with seed
/// splitmix64(seed + (k + 1) * 0x9E3779B97F4A7C15).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  [[nodiscard]] SeededRng substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace circcop
