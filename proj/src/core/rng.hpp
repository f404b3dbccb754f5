#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace sr {

/// Deterministic generator used by all sampling code. Raw mt19937_64 output is
/// mapped to doubles directly so streams are reproducible across platforms
/// (std::uniform_real_distribution is not pinned by the standard).
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double angle() { return uniform(-std::numbers::pi, std::numbers::pi); }

  std::complex<double> on_circle() { return std::polar(1.0, angle()); }

  /// Area-uniform point in |z| <= radius.
  std::complex<double> in_disk(double radius) {
    double m = radius * std::sqrt(uniform());
    return std::polar(m, angle());
  }
};

}  // namespace sr
