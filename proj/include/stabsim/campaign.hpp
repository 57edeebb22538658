#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stabsim/analysis.hpp"
#include "stabsim/common.hpp"
#include "stabsim/coupling.hpp"
#include "stabsim/rfchain.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/scenario.hpp"
#include "stabsim/schedule.hpp"
#include "stabsim/thermal.hpp"

namespace stabsim {

enum class ControlMode { kOn, kOff };

inline const char* control_mode_name(ControlMode mode) {
  return mode == ControlMode::kOn ? "on" : "off";
}

struct TraceRow {
  double t = 0.0;  // s
  std::string node_id;
  double temp = 0.0;  // degC
  double duty = 0.0;
};

// Thermal network stepper: every node integrates against its parent (the
// enclosure air, or the room for enclosure nodes); loops run at the fixed
// thermal dt on quantized, noisy sensor readings. Control-off freezes every
// duty at its configured constant and draws no sensor noise.
class ThermalSim {
 public:
  ThermalSim(const Scenario& sc, ControlMode mode, std::uint64_t seed)
      : sc_(sc), mode_(mode) {
    for (std::size_t i = 0; i < sc.nodes.size(); ++i) {
      index_[sc.nodes[i].node.node_id] = i;
      temps_.push_back(sc.nodes[i].initial_temp);
      duties_.push_back(0.0);
    }
    parents_.resize(sc.nodes.size(), -1);
    for (std::size_t i = 0; i < sc.nodes.size(); ++i) {
      if (!sc.nodes[i].parent.empty()) {
        parents_[i] = static_cast<int>(index_.at(sc.nodes[i].parent));
      }
    }
    for (const auto& l : sc.loops) {
      LoopState state;
      state.cfg = l;
      state.node = static_cast<int>(index_.at(l.node_id));
      state.rng = Rng::substream(seed, "sensor/" + l.node_id);
      loops_.push_back(std::move(state));
    }
  }

  double time() const { return static_cast<double>(steps_) * sc_.thermal_dt; }
  std::int64_t steps() const { return steps_; }

  double temperature(const std::string& node_id) const {
    return temps_[index_.at(node_id)];
  }

  double duty(const std::string& node_id) const {
    return duties_[index_.at(node_id)];
  }

  void step() {
    const double dt = sc_.thermal_dt;
    const double room = ambient_at(sc_.ambient, time());
    const std::vector<double> snapshot = temps_;
    // actuator commands from the snapshot
    std::vector<double> heater_power(temps_.size(), 0.0);
    std::vector<double> fan_scale(temps_.size(), 1.0);
    for (auto& ls : loops_) {
      double d;
      if (mode_ == ControlMode::kOff) {
        d = ls.cfg.off_duty;
      } else {
        const double measured =
            sense(sc_.sensor, snapshot[ls.node], ls.rng.gaussian());
        auto [updated, duty_out] = pi_update(ls.cfg.loop, measured, dt);
        ls.cfg.loop = updated;
        d = duty_out;
      }
      duties_[ls.node] = d;
      if (ls.cfg.actuator == ActuatorKind::kHeater) {
        heater_power[ls.node] =
            d * sc_.nodes[static_cast<std::size_t>(ls.node)].node.max_heater_power;
      } else {
        fan_scale[ls.node] = 1.0 + ls.cfg.fan_gain * d;
      }
    }
    for (std::size_t i = 0; i < temps_.size(); ++i) {
      ThermalNode node = sc_.nodes[i].node;
      node.temperature = snapshot[i];
      node.ambient_coupling *= fan_scale[i];
      const double ambient =
          parents_[i] < 0 ? room : snapshot[static_cast<std::size_t>(parents_[i])];
      temps_[i] = step_plant(node, heater_power[i], ambient, dt).temperature;
    }
    ++steps_;
  }

  // Advances so that every whole dt step with start time <= t has run.
  void advance_to(double t) {
    while ((static_cast<double>(steps_) + 1.0) * sc_.thermal_dt <= t) step();
  }

 private:
  struct LoopState {
    LoopConfig cfg;
    int node = 0;
    Rng rng{0};
  };

  const Scenario& sc_;
  ControlMode mode_;
  std::map<std::string, std::size_t> index_;
  std::vector<double> temps_;
  std::vector<double> duties_;
  std::vector<int> parents_;
  std::vector<LoopState> loops_;
  std::int64_t steps_ = 0;
};

struct CampaignResult {
  std::vector<ChannelSeries> series;       // one per ctrl channel, slot order
  std::vector<PulseRecord> records;        // schedule order
  std::vector<TraceRow> thermal_trace;     // decimated by trace_stride
};

struct CampaignOptions {
  std::optional<double> duration_override;  // s
  bool collect_trace = false;
  // hook for raw envelope dumps: called with the captured window per pulse
  std::function<void(const ChannelId&, const ComplexEnvelope&)> envelope_sink;
};

inline CampaignResult run_campaign(const Scenario& scenario, ControlMode mode,
                                   std::uint64_t seed,
                                   const CampaignOptions& options = {}) {
  Scenario sc = scenario;
  if (options.duration_override) {
    sc.plan.total_duration = *options.duration_override;
  }
  // ctrl path lookup by (unit, channel)
  std::map<std::pair<int, int>, const SignalPath*> ctrl_paths;
  for (const auto& p : sc.paths) {
    if (p.port_kind == PortKind::kCtrl) {
      ctrl_paths[{p.id.unit, p.id.channel}] = &p;
    }
  }
  std::map<std::string, const DeviceConfig*> devices;
  for (const auto& d : sc.devices) {
    devices[d.sensitivity.device_id] = &d;
  }

  ThermalSim thermal(sc, mode, seed);
  thermal.advance_to(sc.warmup);

  Rng noise_rng = Rng::substream(seed, "noise");
  const LoState mon_lo{sc.capture.lo_id, sc.capture.lo_freq, sc.capture.lo_phase};
  const bool noise_enabled =
      std::isfinite(sc.capture.noise_density_dbm_per_hz);

  CampaignResult result;
  const int n_channels = sc.plan.units * sc.plan.channels_per_unit;
  result.series.resize(static_cast<std::size_t>(n_channels));

  const auto schedule = build_schedule(sc.plan);
  result.records.reserve(schedule.size());

  std::int64_t next_trace_step = 0;
  auto collect_trace = [&]() {
    if (!options.collect_trace) return;
    while (thermal.steps() >= next_trace_step) {
      for (const auto& n : sc.nodes) {
        result.thermal_trace.push_back({thermal.time(), n.node.node_id,
                                        thermal.temperature(n.node.node_id),
                                        thermal.duty(n.node.node_id)});
      }
      next_trace_step = thermal.steps() + sc.trace_stride;
    }
  };

  for (const auto& pulse : schedule) {
    const double t = to_seconds(pulse.start);
    thermal.advance_to(sc.warmup + t);
    collect_trace();

    const auto it = ctrl_paths.find({pulse.channel.unit, pulse.channel.channel});
    if (it == ctrl_paths.end()) {
      throw ConfigError("run_campaign: no ctrl path for unit " +
                        std::to_string(pulse.channel.unit) + " channel " +
                        std::to_string(pulse.channel.channel) + " at round " +
                        std::to_string(pulse.round));
    }
    const SignalPath& path = *it->second;

    std::vector<std::pair<DeviceSensitivity, double>> bound;
    bound.reserve(path.device_bindings.size());
    for (const auto& dev_id : path.device_bindings) {
      const DeviceConfig& dev = *devices.at(dev_id);
      bound.emplace_back(dev.sensitivity, thermal.temperature(dev.node_id));
    }

    try {
      const PathPerturbation perturbation = perturbation_for(bound);
      ComplexEnvelope env =
          synthesize_pulse(path, sc.plan.pulse_duration, perturbation,
                           sc.capture.sample_rate_hz, pulse.start);
      env = downconvert(std::move(env), mon_lo);
      if (noise_enabled) {
        env = add_noise_floor(std::move(env), sc.capture.noise_density_dbm_per_hz,
                              sc.capture.full_scale_dbm, noise_rng);
      }
      if (options.envelope_sink) options.envelope_sink(pulse.channel, env);
      // the digital demodulator undoes the analog downconversion, so the
      // shared-LO chain reports phase at the synthesis reference
      const CaptureResult cap =
          capture_pulse(env, -sc.capture.lo_freq, sc.capture.guard_fraction);

      result.records.push_back({pulse.channel, pulse.round, t,
                                cap.mean_amplitude, cap.mean_phase});
      auto& series = result.series[static_cast<std::size_t>(
          pulse.channel.unit * sc.plan.channels_per_unit +
          pulse.channel.channel)];
      series.channel = pulse.channel;
      series.timestamps.push_back(t);
      series.amplitudes.push_back(cap.mean_amplitude);
      series.phases.push_back(cap.mean_phase);
    } catch (const std::exception& e) {
      throw MeasurementError("round " + std::to_string(pulse.round) + ", unit " +
                             std::to_string(pulse.channel.unit) + " channel " +
                             std::to_string(pulse.channel.channel) + ": " +
                             e.what());
    }
  }
  collect_trace();
  return result;
}

}  // namespace stabsim
