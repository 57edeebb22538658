#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabsim/common.hpp"
#include "stabsim/coupling.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/timebase.hpp"

namespace stabsim {

enum class PortKind { kCtrl, kRout, kPump, kRin, kMonitor };

inline const char* port_kind_name(PortKind kind) {
  switch (kind) {
    case PortKind::kCtrl: return "ctrl";
    case PortKind::kRout: return "rout";
    case PortKind::kPump: return "pump";
    case PortKind::kRin: return "rin";
    case PortKind::kMonitor: return "monitor";
  }
  return "?";
}

struct ChannelId {
  int unit = 0;     // 0..2
  int channel = 0;  // 0..4
};

struct SignalPath {
  ChannelId id;
  PortKind port_kind = PortKind::kCtrl;
  double nco_freq = 5.0e9;  // Hz
  std::optional<std::string> lo_binding;
  std::vector<std::string> device_bindings;
  double baseline_gain = 1.0;
  double baseline_phase = 0.0;  // degrees
};

struct LoState {
  std::string lo_id;
  double frequency = 0.0;  // Hz, > 0 for a real LO
  double phase = 0.0;      // degrees
};

// Complex baseband sample stream. Conversion stages are bookkept as a pending
// linear phase ramp (offset + per-sample step, in cycles) instead of being
// multiplied into the samples eagerly. A matched up/down conversion pair then
// cancels exactly, so a shared-LO loopback is bit-identical to the original
// stream for any LO phase.
class ComplexEnvelope {
 public:
  ComplexEnvelope() = default;
  ComplexEnvelope(std::vector<std::complex<double>> samples, Tick start,
                  Tick sample_period)
      : samples_(std::move(samples)),
        start_(start),
        sample_period_(sample_period) {}

  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  Tick start_tick() const { return start_; }
  Tick sample_period() const { return sample_period_; }
  double sample_rate() const {
    return static_cast<double>(kTicksPerSecond) /
           static_cast<double>(sample_period_);
  }
  double start_time() const { return to_seconds(start_); }

  const std::vector<std::complex<double>>& raw() const { return samples_; }
  std::vector<std::complex<double>>& raw() { return samples_; }

  double ramp_offset_cycles() const { return ramp_offset_; }
  double ramp_step_cycles() const { return ramp_step_; }

  void add_ramp(double offset_cycles, double step_cycles) {
    ramp_offset_ += offset_cycles;
    ramp_step_ += step_cycles;
  }

  std::complex<double> sample(std::size_t k) const {
    if (ramp_offset_ == 0.0 && ramp_step_ == 0.0) return samples_[k];
    const double cycles = ramp_offset_ + ramp_step_ * static_cast<double>(k);
    return samples_[k] * std::polar(1.0, 2.0 * kPi * cycles);
  }

  // Samples with the pending ramp applied. When the ramp is exactly zero the
  // stored samples are returned untouched.
  std::vector<std::complex<double>> materialize() const {
    if (ramp_offset_ == 0.0 && ramp_step_ == 0.0) return samples_;
    std::vector<std::complex<double>> out(samples_.size());
    for (std::size_t k = 0; k < samples_.size(); ++k) out[k] = sample(k);
    return out;
  }

  void bake() {
    if (ramp_offset_ == 0.0 && ramp_step_ == 0.0) return;
    samples_ = materialize();
    ramp_offset_ = 0.0;
    ramp_step_ = 0.0;
  }

 private:
  std::vector<std::complex<double>> samples_;
  Tick start_ = 0;
  Tick sample_period_ = 500;  // 2 MS/s default simulation rate
  double ramp_offset_ = 0.0;  // cycles
  double ramp_step_ = 0.0;    // cycles per sample
};

// Rectangular pulse of nominal unit amplitude at complex baseband relative to
// the path NCO, scaled and rotated by the baseline and the thermal
// perturbation.
inline ComplexEnvelope synthesize_pulse(const SignalPath& path,
                                        double duration,
                                        const PathPerturbation& perturbation,
                                        double sample_rate_hz,
                                        Tick start = 0) {
  if (duration <= 0.0) throw ConfigError("synthesize_pulse: duration must be > 0");
  const Tick period = to_ticks(1.0 / sample_rate_hz);
  const auto count = static_cast<std::size_t>(
      std::llround(duration * sample_rate_hz));
  const std::complex<double> value =
      std::polar(path.baseline_gain * perturbation.gain_multiplier,
                 deg_to_rad(path.baseline_phase + perturbation.phase_offset));
  return ComplexEnvelope(std::vector<std::complex<double>>(count, value),
                         start, period);
}

namespace detail {

// Ramp contribution of an LO at the envelope's start and per-sample spacing.
// Up- and downconversion both call this, so their contributions are equal
// bit-for-bit and cancel exactly in a loopback.
inline std::pair<double, double> lo_ramp(const LoState& lo,
                                         const ComplexEnvelope& env) {
  const double offset =
      frac_cycles(lo.frequency, env.start_tick()) + lo.phase / 360.0;
  const double step = frac_cycles(lo.frequency, env.sample_period());
  return {offset, step};
}

}  // namespace detail

inline ComplexEnvelope upconvert(ComplexEnvelope env, const LoState& lo) {
  if (env.empty()) throw ConfigError("upconvert: empty envelope");
  const auto [offset, step] = detail::lo_ramp(lo, env);
  env.add_ramp(offset, step);
  return env;
}

inline ComplexEnvelope downconvert(ComplexEnvelope env, const LoState& lo) {
  if (env.empty()) throw ConfigError("downconvert: empty envelope");
  const auto [offset, step] = detail::lo_ramp(lo, env);
  env.add_ramp(-offset, -step);
  return env;
}

// Places each pulse at its scheduled offset in a single stream; overlapping
// inputs sum complex-linearly, gaps are exact zeros. Inputs must share the
// sample period and be sample-aligned.
inline ComplexEnvelope combine(const std::vector<ComplexEnvelope>& envelopes,
                               const std::vector<Tick>& offsets) {
  if (envelopes.empty() || envelopes.size() != offsets.size()) {
    throw ConfigError("combine: need one offset per envelope");
  }
  const Tick period = envelopes.front().sample_period();
  Tick begin = offsets.front();
  Tick end = offsets.front();
  for (std::size_t i = 0; i < envelopes.size(); ++i) {
    if (envelopes[i].sample_period() != period) {
      throw ConfigError("combine: mismatched sample periods");
    }
    if ((offsets[i] - offsets.front()) % period != 0) {
      throw ConfigError("combine: offsets must be sample-aligned");
    }
    begin = std::min(begin, offsets[i]);
    end = std::max(end, offsets[i] +
                            static_cast<Tick>(envelopes[i].size()) * period);
  }
  const auto total = static_cast<std::size_t>((end - begin) / period);
  std::vector<std::complex<double>> out(total, {0.0, 0.0});
  for (std::size_t i = 0; i < envelopes.size(); ++i) {
    const auto samples = envelopes[i].materialize();
    const auto base = static_cast<std::size_t>((offsets[i] - begin) / period);
    for (std::size_t k = 0; k < samples.size(); ++k) out[base + k] += samples[k];
  }
  return ComplexEnvelope(std::move(out), begin, period);
}

// Additive circular gaussian noise at the configured spectral density,
// referenced to the full-scale (0 dBm) unit-amplitude pulse. A density of
// -inf disables the noise entirely.
inline ComplexEnvelope add_noise_floor(ComplexEnvelope env,
                                       double density_dbm_per_hz,
                                       double full_scale_dbm, Rng& rng) {
  if (std::isinf(density_dbm_per_hz) && density_dbm_per_hz < 0.0) return env;
  const double bandwidth = env.sample_rate();
  const double rel_power =
      std::pow(10.0, (density_dbm_per_hz - full_scale_dbm) / 10.0) * bandwidth;
  const double sigma = std::sqrt(rel_power / 2.0);  // per quadrature
  for (auto& s : env.raw()) {
    s += std::complex<double>(sigma * rng.gaussian(), sigma * rng.gaussian());
  }
  return env;
}

}  // namespace stabsim
