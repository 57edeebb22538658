#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "stabsim/common.hpp"

namespace stabsim {

// The four system clock frequencies: 10 MHz reference, 100 MHz PLL reference,
// 250 MHz FPGA clock, 62.5 kHz sync clock.
constexpr double kRefFreq = 1.0e7;
constexpr double kPllRefFreq = 1.0e8;
constexpr double kFpgaFreq = 2.5e8;
constexpr double kSyncFreq = 6.25e4;

struct ClockNode {
  std::string node_id;
  double nominal_freq = kRefFreq;      // Hz, one of the four system values
  double fractional_offset = 0.0;      // df/f, |.| < 1e-6
  double phase_accum = 0.0;            // cycles
};

inline double actual_freq(const ClockNode& node) {
  return node.nominal_freq * (1.0 + node.fractional_offset);
}

struct DistributorConfig {
  enum class Kind { kPrimary, kSecondary };
  Kind kind = Kind::kPrimary;
  int channels = 12;
  int outputs = 36;  // channels * 3
};

inline void validate_distributor(const DistributorConfig& cfg) {
  if (cfg.outputs != cfg.channels * 3) {
    throw ConfigError("distributor: outputs must equal channels * 3");
  }
}

struct DerivedClocks {
  ClockNode c100m;
  ClockNode c250m;
  ClockNode c62k5;
};

// Coherent synthesis from the 10 MHz reference: all derived clocks inherit the
// reference's fractional offset exactly.
inline DerivedClocks derive_clocks(const ClockNode& reference) {
  if (reference.nominal_freq != kRefFreq) {
    throw ConfigError("derive_clocks: reference must be the 10 MHz clock, got " +
                      std::to_string(reference.nominal_freq) + " Hz");
  }
  const double offset = reference.fractional_offset;
  return {{reference.node_id + "/100M", kPllRefFreq, offset, 0.0},
          {reference.node_id + "/250M", kFpgaFreq, offset, 0.0},
          {reference.node_id + "/62k5", kSyncFreq, offset, 0.0}};
}

// Integral-style frequency discipline against the rubidium reference:
// one iteration removes a fraction g of the measured offset.
inline double compensate(double ocxo_offset, double measured_vs_rb, double g) {
  return ocxo_offset - g * measured_vs_rb;
}

struct GlobalCounter {
  int unit_id = 0;
  std::int64_t count = 0;  // ticks of the 62.5 kHz sync clock
};

// Sync-clock tick count of one unit at time t after its reset epoch.
inline std::int64_t counter_value(double fractional_offset, double t,
                                  double reset_epoch = 0.0) {
  return static_cast<std::int64_t>(
      std::floor(kSyncFreq * (1.0 + fractional_offset) * (t - reset_epoch)));
}

// Maximum pairwise counter skew across units at a common observation time.
inline std::int64_t counter_skew(const std::vector<double>& unit_offsets,
                                 double at_time,
                                 const std::vector<double>& reset_epochs = {}) {
  if (unit_offsets.size() < 2) {
    throw ConfigError("counter_skew: need at least 2 units");
  }
  std::vector<std::int64_t> counts;
  counts.reserve(unit_offsets.size());
  for (std::size_t i = 0; i < unit_offsets.size(); ++i) {
    const double reset = reset_epochs.empty() ? 0.0 : reset_epochs[i];
    counts.push_back(counter_value(unit_offsets[i], at_time, reset));
  }
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi - *lo;
}

}  // namespace stabsim
