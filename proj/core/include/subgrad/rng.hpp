#ifndef SUBGRAD_RNG_HPP
#define SUBGRAD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace subgrad {

// Seeded generator with fully pinned-down derived draws. std::mt19937_64's
// raw sequence is specified by the standard, but the std distributions are
// not, so bounded indices, uniforms and normals are derived here explicitly.
// Identical seeds give bitwise-identical streams on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform index in [0, n) via 128-bit multiply-shift.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Two uniforms per draw, no cached spare,
  // so the stream position is a pure function of the draw count.
  double normal() {
    double u1 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return r * std::cos(two_pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace subgrad

#endif  // SUBGRAD_RNG_HPP
