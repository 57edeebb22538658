#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stabsim/common.hpp"

namespace stabsim {

enum class DeviceKind { kAmplifier, kPll, kMixer };

inline const char* device_kind_name(DeviceKind kind) {
  switch (kind) {
    case DeviceKind::kAmplifier: return "amplifier";
    case DeviceKind::kPll: return "pll";
    case DeviceKind::kMixer: return "mixer";
  }
  return "?";
}

// Linear small-signal temperature sensitivity of one RF device. Amplifiers
// couple to amplitude only; PLLs and mixers may couple to both amplitude and
// phase.
struct DeviceSensitivity {
  std::string device_id;
  DeviceKind kind = DeviceKind::kAmplifier;
  double amp_coeff = 0.0;    // fractional gain per degC
  double phase_coeff = 0.0;  // degrees per degC
  double reference_temp = 25.0;
};

inline void validate_sensitivity(const DeviceSensitivity& s) {
  if (s.kind == DeviceKind::kAmplifier && s.phase_coeff != 0.0) {
    throw ConfigError("device " + s.device_id +
                      ": amplifier sensitivity must have phase_coeff = 0");
  }
}

struct PathPerturbation {
  double gain_multiplier = 1.0;  // > 0
  double phase_offset = 0.0;     // degrees
};

// Combines the bound devices' deviations from reference temperature into a
// single path-level gain/phase perturbation:
//   gain  = prod(1 + a_i dT_i),  phase = sum(p_i dT_i).
inline PathPerturbation perturbation_for(
    const std::vector<std::pair<DeviceSensitivity, double>>& path_devices) {
  PathPerturbation result;
  for (const auto& [dev, temp] : path_devices) {
    const double dt = temp - dev.reference_temp;
    result.gain_multiplier *= 1.0 + dev.amp_coeff * dt;
    result.phase_offset += dev.phase_coeff * dt;
  }
  if (result.gain_multiplier <= 0.0) {
    throw ConfigError(
        "perturbation_for: gain multiplier fell to or below zero; "
        "coefficients are outside the small-signal regime");
  }
  return result;
}

}  // namespace stabsim
