#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace rscsim {

/// Counter-based random stream. The generator is splitmix64 over a counter,
/// keyed by hashing an arbitrary tuple of 64-bit words (seed, shot index,
/// context...). Streams with distinct keys are independent for Monte-Carlo
/// purposes, and a stream's output depends only on its key and on the number
/// of draws made, never on other streams. That is what makes shot-parallel
/// runs reproducible at any worker count.
class RngStream {
 public:
  RngStream(std::initializer_list<std::uint64_t> key_words) {
    std::uint64_t k = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : key_words) k = mix64(k ^ mix64(w + 0xbf58476d1ce4e5b9ull));
    state_ = k;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n must be nonzero.
  std::uint64_t uniform_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal deviate, Box-Muller. Hand-rolled so that output is
  /// bit-identical across standard library implementations.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t state_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rscsim
