#pragma once

#include <cstdint>
#include <random>

namespace bundles {

/// Deterministic draws on top of std::mt19937_64. The engine's output
/// sequence is pinned by the C++ standard and the mappings below avoid
/// std::uniform_*_distribution (whose results vary across standard
/// libraries), so identical seeds reproduce identical streams on every
/// platform. Each generation call owns an independent Rng.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
  }

  /// Unbiased uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = (UINT64_MAX / n) * n;
    std::uint64_t draw = gen_();
    while (draw >= limit) draw = gen_();
    return draw % n;
  }

  /// Bernoulli trial with success probability p.
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bundles
