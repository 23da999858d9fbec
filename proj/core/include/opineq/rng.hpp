#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace opineq {

/// SplitMix64, fully specified so that other implementations can reproduce
/// the same streams bit-for-bit:
///
///   state  <- state + 0x9E3779B97F4A7C15            (mod 2^64)
///   z      <- state
///   z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2^64)
///   z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2^64)
///   output <- z ^ (z >> 31)
///
/// uniform()  = (output >> 11) * 2^-53, in [0, 1).
/// normal()   = Box-Muller on two fresh uniforms u1, u2 (no caching):
///              sqrt(-2 ln(1 - u1)) * cos(2 pi u2).
/// complex_normal() = (normal() + i normal()) / sqrt(2), real part drawn first.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;
  /// log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) noexcept;
  double normal() noexcept;
  std::complex<double> complex_normal() noexcept;
  /// Uniform integer in [0, bound); bound > 0. Uses the high bits via
  /// 128-bit multiply (Lemire's method without rejection).
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// The SplitMix64 output function applied to a single word.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Splitting rule for child streams: derive_seed(s, k) = mix64(s ^ mix64(k + 0x9E3779B97F4A7C15)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace opineq
