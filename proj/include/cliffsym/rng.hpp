#ifndef CLIFFSYM_RNG_HPP
#define CLIFFSYM_RNG_HPP

#include <cstdint>
#include <random>

namespace cliffsym {

/// Seeded deterministic RNG. mt19937_64 is fully pinned by the standard;
/// uniforms are scaled from the top 53 bits directly instead of going through
/// std::uniform_real_distribution, whose output is implementation-defined.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Uniform double in [-1, 1).
  double symmetric() { return uniform(-1.0, 1.0); }

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

} // namespace cliffsym

#endif
