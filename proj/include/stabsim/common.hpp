#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabsim {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MeasurementError : std::runtime_error {
  explicit MeasurementError(const std::string& msg) : std::runtime_error(msg) {}
};

struct AnalysisError : std::runtime_error {
  explicit AnalysisError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CalibrationError : std::runtime_error {
  explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

// Maps an angle into (-180, 180].
inline double wrap_phase_deg(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w <= -180.0) w += 360.0;
  if (w > 180.0) w -= 360.0;
  return w;
}

}  // namespace stabsim
