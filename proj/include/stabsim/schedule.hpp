#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "stabsim/common.hpp"
#include "stabsim/rfchain.hpp"
#include "stabsim/timebase.hpp"

namespace stabsim {

// Time-multiplexed measurement round: every channel of every unit emits one
// pulse per round in a fixed slot order, captured by a single shared ADC path.
struct MeasurementPlan {
  int units = 3;
  int channels_per_unit = 5;
  double pulse_duration = 100e-6;  // s
  double pulse_gap = 100e-6;       // s
  double round_period = 1.3;       // s
  double total_duration = 86400.0; // s
  double carrier = 5.0e9;          // Hz
};

inline void validate_plan(const MeasurementPlan& plan) {
  if (plan.units < 1 || plan.channels_per_unit < 1) {
    throw ConfigError("plan: units and channels_per_unit must be >= 1");
  }
  if (plan.pulse_duration <= 0.0 || plan.pulse_gap < 0.0 ||
      plan.round_period <= 0.0 || plan.total_duration <= 0.0) {
    throw ConfigError("plan: durations must be positive");
  }
  const double slot = plan.pulse_duration + plan.pulse_gap;
  const double needed = slot * plan.units * plan.channels_per_unit;
  if (needed > plan.round_period) {
    throw ConfigError(
        "plan: (pulse_duration + pulse_gap) * units * channels_per_unit = " +
        std::to_string(needed) + " s exceeds round_period = " +
        std::to_string(plan.round_period) + " s");
  }
}

inline std::int64_t round_count(const MeasurementPlan& plan) {
  return static_cast<std::int64_t>(
      std::floor(plan.total_duration / plan.round_period));
}

struct ScheduledPulse {
  ChannelId channel;
  std::int64_t round = 0;
  Tick start = 0;
};

// Slot assignment: channel k of unit u occupies slot (channels_per_unit*u + k)
// of every round; slots are back to back with the configured gap.
inline std::vector<ScheduledPulse> build_schedule(const MeasurementPlan& plan) {
  validate_plan(plan);
  const Tick slot_len = to_ticks(plan.pulse_duration + plan.pulse_gap);
  const Tick round_len = to_ticks(plan.round_period);
  const std::int64_t rounds = round_count(plan);
  std::vector<ScheduledPulse> schedule;
  schedule.reserve(static_cast<std::size_t>(
      rounds * plan.units * plan.channels_per_unit));
  for (std::int64_t r = 0; r < rounds; ++r) {
    for (int u = 0; u < plan.units; ++u) {
      for (int c = 0; c < plan.channels_per_unit; ++c) {
        const int slot = plan.channels_per_unit * u + c;
        schedule.push_back(
            {ChannelId{u, c}, r, r * round_len + slot * slot_len});
      }
    }
  }
  return schedule;
}

struct PulseRecord {
  ChannelId channel;
  std::int64_t round = 0;
  double timestamp = 0.0;       // s
  double mean_amplitude = 0.0;  // dimensionless, >= 0
  double mean_phase = 0.0;      // degrees, in (-180, 180]
};

struct CaptureResult {
  double mean_amplitude = 0.0;
  double mean_phase = 0.0;  // degrees
};

// Demodulates the captured window at `demod` Hz, drops the guard fraction at
// both edges, and reports magnitude and angle of the complex mean.
inline CaptureResult capture_pulse(const ComplexEnvelope& env, double demod,
                                   double guard_fraction = 0.05) {
  if (env.empty()) throw MeasurementError("capture_pulse: empty envelope");
  ComplexEnvelope work = env;
  const LoState nco{"demod", demod, 0.0};
  work = downconvert(std::move(work), nco);
  const auto guard = static_cast<std::size_t>(
      std::floor(static_cast<double>(env.size()) * guard_fraction));
  if (2 * guard >= env.size()) {
    throw MeasurementError(
        "capture_pulse: edge guards discard every sample (guard fraction " +
        std::to_string(guard_fraction) + ", " + std::to_string(env.size()) +
        " samples)");
  }
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = guard; k < env.size() - guard; ++k) acc += work.sample(k);
  acc /= static_cast<double>(env.size() - 2 * guard);
  return {std::abs(acc), wrap_phase_deg(rad_to_deg(std::arg(acc)))};
}

}  // namespace stabsim
