#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mkeb {

/// Portable random source: std::mt19937_64 (whose output sequence the
/// standard fixes) plus hand-written transforms, so a seed reproduces the
/// same doubles on every conforming platform. The std:: distributions are
/// avoided because their algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal by Box-Muller (cosine branch only).
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  /// Exponential with mean 1 by inversion.
  double exponential() { return -std::log(1.0 - uniform()); }

  /// Integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mkeb
