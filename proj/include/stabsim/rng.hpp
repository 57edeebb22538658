#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "stabsim/common.hpp"

namespace stabsim {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic random stream. The engine output is fully specified by the
// standard; the gaussian transform is hand-rolled because the distribution
// adaptors in <random> are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent substream from (seed, label), so adding a consumer
  // does not shift the draws of any other.
  static Rng substream(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = seed;
    for (unsigned char c : label) {
      h ^= c;
      splitmix64(h);
    }
    return Rng(splitmix64(h));
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {  // unit normal, Box-Muller
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace stabsim
