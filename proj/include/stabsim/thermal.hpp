#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "stabsim/common.hpp"

namespace stabsim {

// Lumped first-order thermal state of one device (amplifier, PLL, mixer or
// enclosure air). `max_heater_power` is the actuator authority in W; heater
// power applied per step is duty * max_heater_power.
struct ThermalNode {
  std::string node_id;
  double temperature = 25.0;       // degC
  double heat_capacity = 1.0;      // J/degC, > 0
  double ambient_coupling = 1.0;   // W/degC, > 0
  double max_heater_power = 0.0;   // W
  double self_heating = 0.0;       // W
};

enum class AmbientWaveform { kSinusoid, kRecordedTrace };

struct AmbientProfile {
  double mean = 25.0;       // degC
  double amplitude = 0.0;   // degC, >= 0
  double period = 1800.0;   // s, > 0
  AmbientWaveform waveform = AmbientWaveform::kSinusoid;
  std::vector<double> trace_times;  // s, strictly increasing
  std::vector<double> trace_temps;  // degC
};

inline double ambient_at(const AmbientProfile& profile, double t) {
  if (profile.waveform == AmbientWaveform::kSinusoid) {
    return profile.mean +
           profile.amplitude * std::sin(2.0 * kPi * t / profile.period);
  }
  const auto& ts = profile.trace_times;
  const auto& vs = profile.trace_temps;
  if (ts.size() < 2 || ts.size() != vs.size()) {
    throw ConfigError("recorded-trace ambient profile needs >= 2 samples");
  }
  if (t <= ts.front()) return vs.front();
  if (t >= ts.back()) return vs.back();
  const auto it = std::upper_bound(ts.begin(), ts.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - ts.begin());
  const double f = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
  return vs[i - 1] + f * (vs[i] - vs[i - 1]);
}

// Explicit-Euler update of the first-order plant
//   C dT/dt = G (ambient - T) + P_heater + P_self
// The step is rejected beyond dt = C/G, where the explicit update loses its
// monotone-convergence guarantee.
inline ThermalNode step_plant(ThermalNode node, double heater_power,
                              double ambient, double dt) {
  if (dt <= 0.0) throw ConfigError("step_plant: dt must be > 0");
  const double dt_max = node.heat_capacity / node.ambient_coupling;
  if (dt > dt_max) {
    throw ConfigError("step_plant: dt " + std::to_string(dt) +
                      " exceeds stability limit heat_capacity/ambient_coupling = " +
                      std::to_string(dt_max) + " s for node " + node.node_id);
  }
  const double flow = node.ambient_coupling * (ambient - node.temperature) +
                      heater_power + node.self_heating;
  node.temperature += dt * flow / node.heat_capacity;
  return node;
}

struct SensorModel {
  int adc_bits = 12;
  double full_scale_low = 0.0;    // degC
  double full_scale_high = 100.0; // degC
  double noise_sigma = 0.0;       // degC
};

// Quantizes a (noisy) temperature to the nearest of 2^adc_bits codes spanning
// the full-scale range; saturates at the range ends.
inline double sense(const SensorModel& model, double true_temp,
                    double rng_draw) {
  if (!(model.full_scale_low < model.full_scale_high)) {
    throw ConfigError("sense: full_scale_low must be below full_scale_high");
  }
  const double noisy = true_temp + model.noise_sigma * rng_draw;
  const std::int64_t levels = (std::int64_t{1} << model.adc_bits) - 1;
  const double lsb =
      (model.full_scale_high - model.full_scale_low) / static_cast<double>(levels);
  std::int64_t code =
      std::llround((noisy - model.full_scale_low) / lsb);
  code = std::clamp<std::int64_t>(code, 0, levels);
  return model.full_scale_low + static_cast<double>(code) * lsb;
}

inline double sensor_lsb(const SensorModel& model) {
  const std::int64_t levels = (std::int64_t{1} << model.adc_bits) - 1;
  return (model.full_scale_high - model.full_scale_low) /
         static_cast<double>(levels);
}

enum class LoopPolarity { kHeating, kCooling };

struct PiLoop {
  double kp = 0.0;         // duty per degC
  double ki = 0.0;         // duty per (degC * s)
  double setpoint = 25.0;  // degC
  double integral = 0.0;   // degC * s
  double duty_min = 0.0;
  double duty_max = 1.0;
  LoopPolarity polarity = LoopPolarity::kHeating;
};

struct PiResult {
  PiLoop loop;
  double duty = 0.0;
};

// One PI step with conditional-integration anti-windup: the integral only
// advances when the raw output is not saturated against the error direction.
inline PiResult pi_update(PiLoop loop, double measured, double dt) {
  if (dt <= 0.0) throw ConfigError("pi_update: dt must be > 0");
  const double error = (loop.polarity == LoopPolarity::kHeating)
                           ? loop.setpoint - measured
                           : measured - loop.setpoint;
  const double raw = loop.kp * error + loop.ki * loop.integral;
  const double duty = std::clamp(raw, loop.duty_min, loop.duty_max);
  const bool clamped_high = raw > loop.duty_max && error > 0.0;
  const bool clamped_low = raw < loop.duty_min && error < 0.0;
  if (!clamped_high && !clamped_low) {
    loop.integral += error * dt;
  }
  return {loop, duty};
}

// Fan airflow raises the enclosure's convective conductance.
inline ThermalNode apply_fan(double duty, ThermalNode enclosure,
                             double fan_gain) {
  enclosure.ambient_coupling *= 1.0 + fan_gain * duty;
  return enclosure;
}

}  // namespace stabsim
