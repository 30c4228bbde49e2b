#pragma once

#include <cstdint>
#include <stdexcept>

namespace mvc {

/// splitmix64 stream. The generator is pinned (not std::mt19937 or any
/// distribution from <random>) so that seeded corpora are byte-reproducible
/// across toolchains. Bounded draws use Lemire multiply-shift with rejection;
/// unit_real keeps the top 53 bits of one draw.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("SplitMix64::below: bound must be positive");
    }
    unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1).
  double unit_real() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Independent child stream seeded from this stream's next output.
  SplitMix64 split() noexcept { return SplitMix64(next()); }

private:
  std::uint64_t state_;
};

}  // namespace mvc
