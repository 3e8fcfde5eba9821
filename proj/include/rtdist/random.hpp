#pragma once

#include <cstdint>
#include <random>

namespace rtdist {

// Seedable 64-bit random stream. Draws are fully determined by the seed and
// identical across platforms (the engine is std::mt19937_64 and uniform01()
// maps raw bits directly instead of going through the distribution classes,
// whose output is implementation-defined).
//
// Parallel callers do not share an Rng: each worker takes its own substream
// via stream(k), which derives an independent seed with a splitmix64 hop.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1) with 53 random bits. Can return exactly 0.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Independent substream k of the same base seed.
  Rng stream(std::uint64_t k) const {
    return Rng(mix(seed_ + 0x9e3779b97f4a7c15ull * (k + 1)));
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rtdist
