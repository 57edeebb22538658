#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "stabsim/common.hpp"

namespace stabsim {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major 2x2

constexpr double kUnitaryTolerance = 1e-12;

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat_adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

inline Complex mat_trace(const Mat2& m) { return m[0] + m[3]; }

inline Complex mat_det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

// 2x2 unitary, checked on construction: U^dag U = I and |det U| = 1.
class SingleQubitUnitary {
 public:
  explicit SingleQubitUnitary(const Mat2& m) : m_(m) {
    const Mat2 prod = mat_mul(mat_adjoint(m), m);
    const Mat2 identity{Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
                        Complex{1, 0}};
    for (int i = 0; i < 4; ++i) {
      if (std::abs(prod[i] - identity[i]) > kUnitaryTolerance) {
        throw ConfigError("SingleQubitUnitary: matrix is not unitary");
      }
    }
    if (std::abs(std::abs(mat_det(m)) - 1.0) > kUnitaryTolerance) {
      throw ConfigError("SingleQubitUnitary: |det| must be 1");
    }
  }

  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

// Average gate fidelity for d = 2: (|Tr(U^dag V)|^2 + 2) / 6.
inline double avg_fidelity(const SingleQubitUnitary& u,
                           const SingleQubitUnitary& v) {
  const Complex tr = mat_trace(mat_mul(mat_adjoint(u.matrix()), v.matrix()));
  return (std::norm(tr) + 2.0) / 6.0;
}

// exp(-i (theta/2) X): rotation by theta about the x axis.
inline SingleQubitUnitary x_rotation(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return SingleQubitUnitary(
      {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}});
}

// Rotation by theta about the axis cos(phi) X + sin(phi) Y.
inline SingleQubitUnitary xy_axis_rotation(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex off_upper = Complex{0, -s} * std::polar(1.0, -phi);
  const Complex off_lower = Complex{0, -s} * std::polar(1.0, phi);
  return SingleQubitUnitary({Complex{c, 0}, off_upper, off_lower, Complex{c, 0}});
}

// Coherent-error parameters: fractional rotation-angle error epsilon and axis
// misalignment phi (radians). The over/under-rotation angle is
// delta_theta = (pi/2) * epsilon, derived on demand.
struct GateErrorModel {
  double epsilon = 0.0;
  double phi = 0.0;
};

struct InfidelityResult {
  double exact = 0.0;        // in [0, 2/3] for these models
  double small_angle = 0.0;
};

// X/2 gate with rotation-angle error: 1 - F = (2/3) sin^2(delta_theta / 2).
inline InfidelityResult amp_error_infidelity(double epsilon) {
  const double delta_theta = (kPi / 2.0) * epsilon;
  const double s = std::sin(delta_theta / 2.0);
  return {(2.0 / 3.0) * s * s, delta_theta * delta_theta / 6.0};
}

// X/2 gate with axis misalignment: 1 - F = (2/3) (1 - cos^4(phi / 2)).
inline InfidelityResult phase_error_infidelity(double phi) {
  const double c = std::cos(phi / 2.0);
  const double c2 = c * c;
  return {(2.0 / 3.0) * (1.0 - c2 * c2), phi * phi / 3.0};
}

struct ChannelInfidelity {
  InfidelityResult amplitude;
  InfidelityResult phase;
};

// Bridge from measured stability to gate error: the amplitude standard
// deviation (fraction) becomes epsilon, the phase standard deviation
// (radians) becomes phi.
inline ChannelInfidelity infidelity_from_stats(double amp_std_pct,
                                               double phase_std_deg) {
  return {amp_error_infidelity(amp_std_pct / 100.0),
          phase_error_infidelity(deg_to_rad(phase_std_deg))};
}

}  // namespace stabsim
