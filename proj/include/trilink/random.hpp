#pragma once

#include "trilink/geometry.hpp"

#include <cstdint>
#include <random>

namespace trilink {

/// Deterministic random stream. Only the raw 64-bit engine output is used
/// (its sequence is fixed by the standard), so draws are reproducible across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream derived from (seed, stream) by SplitMix64 mixing.
  static Rng stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % bound;
  }

  /// Uniform rational k/den with k in [-den, den]: a grid on [-1, 1].
  Scalar unit_rational(std::uint64_t den) {
    const auto k = static_cast<std::int64_t>(below(2 * den + 1)) - static_cast<std::int64_t>(den);
    return Scalar(k) / Scalar(static_cast<std::int64_t>(den));
  }

  Point3 unit_offset(std::uint64_t den) {
    Scalar x = unit_rational(den);
    Scalar y = unit_rational(den);
    Scalar z = unit_rational(den);
    return {std::move(x), std::move(y), std::move(z)};
  }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace trilink
