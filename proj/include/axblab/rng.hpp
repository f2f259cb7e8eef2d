#pragma once

#include <cstdint>
#include <random>

namespace axblab {

/// Seeded random source for test fields and probe ensembles.
///
/// Only the mt19937_64 stream is used (its output is fixed by the standard);
/// uniform values are derived by explicit bit manipulation so ensembles are
/// bitwise reproducible across compilers and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }

    std::uint64_t integer() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace axblab
