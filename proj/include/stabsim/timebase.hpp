#pragma once

#include <cmath>
#include <cstdint>

namespace stabsim {

// Simulation time is kept in integer nanoseconds so that pulse starts, sample
// spacings and oscillator phases can be combined without accumulating
// floating-point error over a 24 h run.
using Tick = std::int64_t;

constexpr Tick kTicksPerSecond = 1'000'000'000;

inline Tick to_ticks(double seconds) {
  return static_cast<Tick>(std::llround(seconds * 1e9));
}

inline double to_seconds(Tick t) { return static_cast<double>(t) * 1e-9; }

// Fractional part of freq*t in cycles. For integer-valued frequencies the
// reduction is done in 128-bit integer arithmetic and is exact, which keeps
// oscillator phase bookkeeping bit-stable across arbitrarily long timelines.
inline double frac_cycles(double freq_hz, Tick t_ns) {
  double int_part;
  if (std::modf(freq_hz, &int_part) == 0.0 && std::fabs(freq_hz) < 9.0e15) {
    const __int128 prod =
        static_cast<__int128>(static_cast<std::int64_t>(freq_hz)) * t_ns;
    const auto rem = static_cast<std::int64_t>(prod % kTicksPerSecond);
    return static_cast<double>(rem) * 1e-9;
  }
  return std::fmod(freq_hz * (static_cast<double>(t_ns) * 1e-9), 1.0);
}

}  // namespace stabsim
