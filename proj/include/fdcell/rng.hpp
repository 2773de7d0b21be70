#pragma once

#include <cstdint>
#include <random>

namespace fdcell {

// Seeded uniform generator used for scenario drops. Doubles are derived
// from the raw 64-bit stream instead of std::uniform_real_distribution so
// that a fixed seed yields a bit-identical sequence on every standard
// library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fdcell
