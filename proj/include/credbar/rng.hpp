#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace credbar {

/// Deterministic random source. Streams derived from the same base seed via
/// split() are independent for practical purposes and reproducible
/// bit-for-bit across runs, which the oracle relies on for chunked
/// aggregation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : base_seed_(seed), engine_(mix(seed, stream)) {}

  /// Uniform draw on the open interval (0, 1); never returns 0 or 1, so
  /// logs of draws are always finite.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the pair partner is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double phi = 6.283185307179586476925287 * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  /// Unit-rate exponential draw.
  double exponential() { return -std::log(uniform()); }

  /// Child stream; independent of draws made from this instance so far.
  Rng split(std::uint64_t stream) const { return Rng(base_seed_, stream); }

  std::uint64_t base_seed() const { return base_seed_; }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t base_seed_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace credbar
