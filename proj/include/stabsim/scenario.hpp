#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabsim/clocktree.hpp"
#include "stabsim/common.hpp"
#include "stabsim/coupling.hpp"
#include "stabsim/rfchain.hpp"
#include "stabsim/schedule.hpp"
#include "stabsim/thermal.hpp"

namespace stabsim {

using nlohmann::json;

enum class ActuatorKind { kHeater, kFan };

struct NodeConfig {
  ThermalNode node;
  double initial_temp = 25.0;
  std::string parent;  // enclosure node id, or empty for the room
};

struct LoopConfig {
  std::string node_id;
  ActuatorKind actuator = ActuatorKind::kHeater;
  PiLoop loop;
  double off_duty = 0.0;  // frozen duty in control-off mode
  double fan_gain = 0.0;  // conductance multiplier slope, fan loops only
};

struct DeviceConfig {
  DeviceSensitivity sensitivity;
  std::string node_id;  // thermal node whose temperature drives the device
};

struct CaptureConfig {
  std::string lo_id = "mon_lo";
  double lo_freq = 2.5e9;       // Hz
  double lo_phase = 0.0;        // degrees
  double noise_density_dbm_per_hz = -148.0;
  double full_scale_dbm = 0.0;
  double sample_rate_hz = 2.0e6;
  double guard_fraction = 0.05;
};

struct ClockConfig {
  std::vector<double> unit_offsets;  // df/f per unit
  double compensator_gain = 0.5;
  double discipline_interval = 1.0;  // s
};

struct Scenario {
  std::string name = "default";
  std::uint64_t seed = 1;
  double thermal_dt = 0.1;   // s
  double warmup = 3600.0;    // s of uncaptured settling before the campaign
  int trace_stride = 100;    // thermal steps per exported trace row
  AmbientProfile ambient;
  SensorModel sensor;
  std::vector<NodeConfig> nodes;
  std::vector<LoopConfig> loops;
  std::vector<DeviceConfig> devices;
  std::vector<SignalPath> paths;
  MeasurementPlan plan;
  CaptureConfig capture;
  ClockConfig clock;
};

// ---------------------------------------------------------------------------
// JSON serialization (canonical form; also the input format)

inline json to_json(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  j["seed"] = sc.seed;
  j["sim"] = {{"thermal_dt_s", sc.thermal_dt},
              {"warmup_s", sc.warmup},
              {"trace_stride", sc.trace_stride}};
  j["ambient"] = {
      {"mean_c", sc.ambient.mean},
      {"amplitude_c", sc.ambient.amplitude},
      {"period_s", sc.ambient.period},
      {"waveform", sc.ambient.waveform == AmbientWaveform::kSinusoid
                       ? "sinusoid"
                       : "recorded-trace"}};
  if (sc.ambient.waveform == AmbientWaveform::kRecordedTrace) {
    j["ambient"]["trace_times_s"] = sc.ambient.trace_times;
    j["ambient"]["trace_temps_c"] = sc.ambient.trace_temps;
  }
  j["sensor"] = {{"adc_bits", sc.sensor.adc_bits},
                 {"full_scale_low_c", sc.sensor.full_scale_low},
                 {"full_scale_high_c", sc.sensor.full_scale_high},
                 {"noise_sigma_c", sc.sensor.noise_sigma}};
  j["thermal_nodes"] = json::array();
  for (const auto& n : sc.nodes) {
    j["thermal_nodes"].push_back(
        {{"id", n.node.node_id},
         {"heat_capacity_j_per_c", n.node.heat_capacity},
         {"ambient_coupling_w_per_c", n.node.ambient_coupling},
         {"max_heater_power_w", n.node.max_heater_power},
         {"self_heating_w", n.node.self_heating},
         {"initial_temp_c", n.initial_temp},
         {"parent", n.parent}});
  }
  j["loops"] = json::array();
  for (const auto& l : sc.loops) {
    j["loops"].push_back(
        {{"node", l.node_id},
         {"actuator", l.actuator == ActuatorKind::kHeater ? "heater" : "fan"},
         {"kp", l.loop.kp},
         {"ki", l.loop.ki},
         {"setpoint_c", l.loop.setpoint},
         {"duty_min", l.loop.duty_min},
         {"duty_max", l.loop.duty_max},
         {"polarity",
          l.loop.polarity == LoopPolarity::kHeating ? "heating" : "cooling"},
         {"off_duty", l.off_duty},
         {"fan_gain", l.fan_gain}});
  }
  j["devices"] = json::array();
  for (const auto& d : sc.devices) {
    j["devices"].push_back({{"id", d.sensitivity.device_id},
                            {"kind", device_kind_name(d.sensitivity.kind)},
                            {"node", d.node_id},
                            {"amp_coeff_per_c", d.sensitivity.amp_coeff},
                            {"phase_coeff_deg_per_c", d.sensitivity.phase_coeff},
                            {"reference_temp_c", d.sensitivity.reference_temp}});
  }
  j["paths"] = json::array();
  for (const auto& p : sc.paths) {
    json pj = {{"unit", p.id.unit},
               {"channel", p.id.channel},
               {"port", port_kind_name(p.port_kind)},
               {"nco_freq_hz", p.nco_freq},
               {"devices", p.device_bindings},
               {"baseline_gain", p.baseline_gain},
               {"baseline_phase_deg", p.baseline_phase}};
    if (p.lo_binding) pj["lo"] = *p.lo_binding;
    j["paths"].push_back(pj);
  }
  j["plan"] = {{"units", sc.plan.units},
               {"channels_per_unit", sc.plan.channels_per_unit},
               {"pulse_duration_s", sc.plan.pulse_duration},
               {"pulse_gap_s", sc.plan.pulse_gap},
               {"round_period_s", sc.plan.round_period},
               {"total_duration_s", sc.plan.total_duration},
               {"carrier_hz", sc.plan.carrier}};
  j["capture"] = {{"lo_id", sc.capture.lo_id},
                  {"lo_freq_hz", sc.capture.lo_freq},
                  {"lo_phase_deg", sc.capture.lo_phase},
                  {"noise_density_dbm_per_hz", sc.capture.noise_density_dbm_per_hz},
                  {"full_scale_dbm", sc.capture.full_scale_dbm},
                  {"sample_rate_hz", sc.capture.sample_rate_hz},
                  {"guard_fraction", sc.capture.guard_fraction}};
  j["clock"] = {{"unit_offsets", sc.clock.unit_offsets},
                {"compensator_gain", sc.clock.compensator_gain},
                {"discipline_interval_s", sc.clock.discipline_interval}};
  return j;
}

// FNV-1a over the canonical dump; stable across loads of the same scenario.
inline std::uint64_t scenario_hash(const Scenario& sc) {
  const std::string dump = to_json(sc).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Parsing with total validation: every problem is collected and reported with
// its config path; nothing past the JSON grammar is fail-fast.

namespace detail {

class FieldReader {
 public:
  FieldReader(const json& j, std::string path, std::vector<std::string>& errors)
      : j_(j), path_(std::move(path)), errors_(errors) {}

  template <typename T>
  T get(const std::string& key, T fallback) const {
    if (!j_.contains(key)) return fallback;
    return read<T>(key, fallback);
  }

  template <typename T>
  T require(const std::string& key, T fallback) const {
    if (!j_.contains(key)) {
      errors_.push_back(path_ + "." + key + ": missing required field");
      return fallback;
    }
    return read<T>(key, fallback);
  }

 private:
  template <typename T>
  T read(const std::string& key, T fallback) const {
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception& e) {
      errors_.push_back(path_ + "." + key + ": " + e.what());
      return fallback;
    }
  }

  const json& j_;
  std::string path_;
  std::vector<std::string>& errors_;
};

}  // namespace detail

inline Scenario scenario_from_json(const json& j,
                                   std::vector<std::string>& errors) {
  Scenario sc;
  detail::FieldReader root(j, "$", errors);
  sc.name = root.get<std::string>("name", "unnamed");
  sc.seed = root.get<std::uint64_t>("seed", 1);

  if (j.contains("sim")) {
    detail::FieldReader sim(j["sim"], "$.sim", errors);
    sc.thermal_dt = sim.get("thermal_dt_s", sc.thermal_dt);
    sc.warmup = sim.get("warmup_s", sc.warmup);
    sc.trace_stride = sim.get("trace_stride", sc.trace_stride);
  }
  if (j.contains("ambient")) {
    detail::FieldReader amb(j["ambient"], "$.ambient", errors);
    sc.ambient.mean = amb.require("mean_c", 25.0);
    sc.ambient.amplitude = amb.get("amplitude_c", 0.0);
    sc.ambient.period = amb.get("period_s", 1800.0);
    const auto wf = amb.get<std::string>("waveform", "sinusoid");
    if (wf == "sinusoid") {
      sc.ambient.waveform = AmbientWaveform::kSinusoid;
    } else if (wf == "recorded-trace") {
      sc.ambient.waveform = AmbientWaveform::kRecordedTrace;
      sc.ambient.trace_times =
          amb.require("trace_times_s", std::vector<double>{});
      sc.ambient.trace_temps =
          amb.require("trace_temps_c", std::vector<double>{});
    } else {
      errors.push_back("$.ambient.waveform: unknown waveform '" + wf + "'");
    }
  }
  if (j.contains("sensor")) {
    detail::FieldReader sen(j["sensor"], "$.sensor", errors);
    sc.sensor.adc_bits = sen.get("adc_bits", 12);
    sc.sensor.full_scale_low = sen.get("full_scale_low_c", 0.0);
    sc.sensor.full_scale_high = sen.get("full_scale_high_c", 100.0);
    sc.sensor.noise_sigma = sen.get("noise_sigma_c", 0.0);
  }
  for (std::size_t i = 0; i < j.value("thermal_nodes", json::array()).size();
       ++i) {
    const auto& nj = j["thermal_nodes"][i];
    detail::FieldReader nr(nj, "$.thermal_nodes[" + std::to_string(i) + "]",
                           errors);
    NodeConfig n;
    n.node.node_id = nr.require<std::string>("id", "");
    n.node.heat_capacity = nr.require("heat_capacity_j_per_c", 1.0);
    n.node.ambient_coupling = nr.require("ambient_coupling_w_per_c", 1.0);
    n.node.max_heater_power = nr.get("max_heater_power_w", 0.0);
    n.node.self_heating = nr.get("self_heating_w", 0.0);
    n.initial_temp = nr.get("initial_temp_c", 25.0);
    n.node.temperature = n.initial_temp;
    n.parent = nr.get<std::string>("parent", "");
    sc.nodes.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < j.value("loops", json::array()).size(); ++i) {
    const auto& lj = j["loops"][i];
    detail::FieldReader lr(lj, "$.loops[" + std::to_string(i) + "]", errors);
    LoopConfig l;
    l.node_id = lr.require<std::string>("node", "");
    const auto act = lr.get<std::string>("actuator", "heater");
    if (act == "heater") {
      l.actuator = ActuatorKind::kHeater;
    } else if (act == "fan") {
      l.actuator = ActuatorKind::kFan;
    } else {
      errors.push_back("$.loops[" + std::to_string(i) +
                       "].actuator: unknown actuator '" + act + "'");
    }
    l.loop.kp = lr.require("kp", 0.0);
    l.loop.ki = lr.require("ki", 0.0);
    l.loop.setpoint = lr.require("setpoint_c", 25.0);
    l.loop.duty_min = lr.get("duty_min", 0.0);
    l.loop.duty_max = lr.get("duty_max", 1.0);
    const auto pol = lr.get<std::string>("polarity", "heating");
    if (pol == "heating") {
      l.loop.polarity = LoopPolarity::kHeating;
    } else if (pol == "cooling") {
      l.loop.polarity = LoopPolarity::kCooling;
    } else {
      errors.push_back("$.loops[" + std::to_string(i) +
                       "].polarity: unknown polarity '" + pol + "'");
    }
    l.off_duty = lr.get("off_duty", 0.0);
    l.fan_gain = lr.get("fan_gain", 0.0);
    sc.loops.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < j.value("devices", json::array()).size(); ++i) {
    const auto& dj = j["devices"][i];
    const std::string path = "$.devices[" + std::to_string(i) + "]";
    detail::FieldReader dr(dj, path, errors);
    DeviceConfig d;
    d.sensitivity.device_id = dr.require<std::string>("id", "");
    const auto kind = dr.get<std::string>("kind", "amplifier");
    if (kind == "amplifier") {
      d.sensitivity.kind = DeviceKind::kAmplifier;
    } else if (kind == "pll") {
      d.sensitivity.kind = DeviceKind::kPll;
    } else if (kind == "mixer") {
      d.sensitivity.kind = DeviceKind::kMixer;
    } else {
      errors.push_back(path + ".kind: unknown device kind '" + kind + "'");
    }
    d.node_id = dr.require<std::string>("node", "");
    d.sensitivity.amp_coeff = dr.get("amp_coeff_per_c", 0.0);
    d.sensitivity.phase_coeff = dr.get("phase_coeff_deg_per_c", 0.0);
    d.sensitivity.reference_temp = dr.require("reference_temp_c", 25.0);
    sc.devices.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < j.value("paths", json::array()).size(); ++i) {
    const auto& pj = j["paths"][i];
    const std::string path = "$.paths[" + std::to_string(i) + "]";
    detail::FieldReader pr(pj, path, errors);
    SignalPath p;
    p.id.unit = pr.require("unit", 0);
    p.id.channel = pr.require("channel", 0);
    const auto port = pr.get<std::string>("port", "ctrl");
    if (port == "ctrl") {
      p.port_kind = PortKind::kCtrl;
    } else if (port == "rout") {
      p.port_kind = PortKind::kRout;
    } else if (port == "pump") {
      p.port_kind = PortKind::kPump;
    } else if (port == "rin") {
      p.port_kind = PortKind::kRin;
    } else if (port == "monitor") {
      p.port_kind = PortKind::kMonitor;
    } else {
      errors.push_back(path + ".port: unknown port kind '" + port + "'");
    }
    p.nco_freq = pr.get("nco_freq_hz", 5.0e9);
    if (pj.contains("lo")) p.lo_binding = pr.get<std::string>("lo", "");
    p.device_bindings = pr.get("devices", std::vector<std::string>{});
    p.baseline_gain = pr.get("baseline_gain", 1.0);
    p.baseline_phase = pr.get("baseline_phase_deg", 0.0);
    sc.paths.push_back(std::move(p));
  }
  if (j.contains("plan")) {
    detail::FieldReader pl(j["plan"], "$.plan", errors);
    sc.plan.units = pl.get("units", 3);
    sc.plan.channels_per_unit = pl.get("channels_per_unit", 5);
    sc.plan.pulse_duration = pl.get("pulse_duration_s", 100e-6);
    sc.plan.pulse_gap = pl.get("pulse_gap_s", 100e-6);
    sc.plan.round_period = pl.get("round_period_s", 1.3);
    sc.plan.total_duration = pl.get("total_duration_s", 86400.0);
    sc.plan.carrier = pl.get("carrier_hz", 5.0e9);
  }
  if (j.contains("capture")) {
    detail::FieldReader cp(j["capture"], "$.capture", errors);
    sc.capture.lo_id = cp.get<std::string>("lo_id", "mon_lo");
    sc.capture.lo_freq = cp.get("lo_freq_hz", 2.5e9);
    sc.capture.lo_phase = cp.get("lo_phase_deg", 0.0);
    sc.capture.noise_density_dbm_per_hz =
        cp.get("noise_density_dbm_per_hz", -148.0);
    sc.capture.full_scale_dbm = cp.get("full_scale_dbm", 0.0);
    sc.capture.sample_rate_hz = cp.get("sample_rate_hz", 2.0e6);
    sc.capture.guard_fraction = cp.get("guard_fraction", 0.05);
  }
  if (j.contains("clock")) {
    detail::FieldReader ck(j["clock"], "$.clock", errors);
    sc.clock.unit_offsets = ck.get("unit_offsets", std::vector<double>{});
    sc.clock.compensator_gain = ck.get("compensator_gain", 0.5);
    sc.clock.discipline_interval = ck.get("discipline_interval_s", 1.0);
  }
  return sc;
}

// Semantic validation. Appends one message per violation; never throws.
inline void validate_scenario(const Scenario& sc,
                              std::vector<std::string>& errors) {
  std::set<std::string> node_ids;
  for (const auto& n : sc.nodes) {
    const std::string where = "$.thermal_nodes(" + n.node.node_id + ")";
    if (!node_ids.insert(n.node.node_id).second) {
      errors.push_back(where + ": duplicate node id");
    }
    if (n.node.heat_capacity <= 0.0) {
      errors.push_back(where + ": heat_capacity must be > 0");
    }
    if (n.node.ambient_coupling <= 0.0) {
      errors.push_back(where + ": ambient_coupling must be > 0");
    }
  }
  for (const auto& n : sc.nodes) {
    if (!n.parent.empty() && !node_ids.count(n.parent)) {
      errors.push_back("$.thermal_nodes(" + n.node.node_id +
                       ").parent: unknown node '" + n.parent + "'");
    }
  }
  std::set<std::string> looped_nodes;
  for (const auto& l : sc.loops) {
    const std::string where = "$.loops(" + l.node_id + ")";
    if (!node_ids.count(l.node_id)) {
      errors.push_back(where + ": unknown node '" + l.node_id + "'");
    } else if (!looped_nodes.insert(l.node_id).second) {
      errors.push_back(where + ": node has more than one loop");
    }
    if (l.loop.duty_min < 0.0 || l.loop.duty_max > 1.0 ||
        l.loop.duty_min >= l.loop.duty_max) {
      errors.push_back(where + ": duty limits must satisfy 0 <= min < max <= 1");
    }
    if (l.actuator == ActuatorKind::kFan && l.fan_gain <= 0.0) {
      errors.push_back(where + ": fan loop needs fan_gain > 0");
    }
  }
  // explicit-Euler guard, evaluated at the largest fan-boosted conductance
  for (const auto& n : sc.nodes) {
    double coupling = n.node.ambient_coupling;
    for (const auto& l : sc.loops) {
      if (l.node_id == n.node.node_id && l.actuator == ActuatorKind::kFan) {
        coupling *= 1.0 + l.fan_gain * l.loop.duty_max;
      }
    }
    if (sc.thermal_dt > n.node.heat_capacity / coupling) {
      errors.push_back("$.sim.thermal_dt_s: " + std::to_string(sc.thermal_dt) +
                       " s violates the stability guard for node " +
                       n.node.node_id + " (max " +
                       std::to_string(n.node.heat_capacity / coupling) + " s)");
    }
  }
  std::set<std::string> device_ids;
  for (const auto& d : sc.devices) {
    const std::string where = "$.devices(" + d.sensitivity.device_id + ")";
    if (!device_ids.insert(d.sensitivity.device_id).second) {
      errors.push_back(where + ": duplicate device id");
    }
    if (!node_ids.count(d.node_id)) {
      errors.push_back(where + ".node: unknown node '" + d.node_id + "'");
    }
    try {
      validate_sensitivity(d.sensitivity);
    } catch (const ConfigError& e) {
      errors.push_back(where + ": " + e.what());
    }
  }
  int capture_paths = 0;
  std::map<int, std::map<PortKind, std::string>> unit_los;
  std::set<std::pair<int, int>> ctrl_ids;
  int ctrl_count = 0;
  for (const auto& p : sc.paths) {
    const std::string where = "$.paths(unit " + std::to_string(p.id.unit) +
                              " ch " + std::to_string(p.id.channel) + " " +
                              port_kind_name(p.port_kind) + ")";
    if (p.port_kind == PortKind::kCtrl) {
      ++ctrl_count;
      if (p.lo_binding) {
        errors.push_back(where + ": ctrl paths are direct and carry no LO");
      }
      if (!ctrl_ids.insert({p.id.unit, p.id.channel}).second) {
        errors.push_back(where + ": duplicate ctrl channel");
      }
    } else if (!p.lo_binding) {
      errors.push_back(where + ": converted paths need an LO binding");
    } else {
      unit_los[p.id.unit][p.port_kind] = *p.lo_binding;
    }
    if (p.port_kind == PortKind::kRin || p.port_kind == PortKind::kMonitor) {
      ++capture_paths;
    }
    for (const auto& dev : p.device_bindings) {
      if (!device_ids.count(dev)) {
        errors.push_back(where + ".devices: unknown device '" + dev + "'");
      }
    }
    if (p.baseline_gain <= 0.0) {
      errors.push_back(where + ": baseline_gain must be > 0");
    }
  }
  for (const auto& [unit, los] : unit_los) {
    const auto rout = los.find(PortKind::kRout);
    const auto rin = los.find(PortKind::kRin);
    if (rout != los.end() && rin != los.end() && rout->second != rin->second) {
      errors.push_back("$.paths: unit " + std::to_string(unit) +
                       " rout and rin must share one LO");
    }
  }
  if (capture_paths != 1) {
    errors.push_back("$.paths: need exactly one capture (rin/monitor) path, got " +
                     std::to_string(capture_paths));
  }
  if (ctrl_count != sc.plan.units * sc.plan.channels_per_unit) {
    errors.push_back("$.paths: plan expects " +
                     std::to_string(sc.plan.units * sc.plan.channels_per_unit) +
                     " ctrl channels, scenario defines " +
                     std::to_string(ctrl_count));
  }
  try {
    validate_plan(sc.plan);
  } catch (const ConfigError& e) {
    errors.push_back(std::string("$.plan: ") + e.what());
  }
  if (sc.capture.lo_freq <= 0.0) {
    errors.push_back("$.capture.lo_freq_hz: must be > 0");
  }
  if (sc.capture.sample_rate_hz <= 0.0 ||
      kTicksPerSecond % to_ticks(1.0 / sc.capture.sample_rate_hz) != 0) {
    errors.push_back(
        "$.capture.sample_rate_hz: must divide 1 GHz into a whole number of "
        "nanoseconds");
  }
  if (sc.capture.guard_fraction < 0.0 || sc.capture.guard_fraction >= 0.5) {
    errors.push_back("$.capture.guard_fraction: must be in [0, 0.5)");
  }
  if (!(sc.sensor.full_scale_low < sc.sensor.full_scale_high)) {
    errors.push_back("$.sensor: full_scale_low must be below full_scale_high");
  }
  if (sc.ambient.amplitude < 0.0) {
    errors.push_back("$.ambient.amplitude_c: must be >= 0");
  }
  if (sc.ambient.period <= 0.0) {
    errors.push_back("$.ambient.period_s: must be > 0");
  }
  if (sc.ambient.waveform == AmbientWaveform::kRecordedTrace &&
      (sc.ambient.trace_times.size() < 2 ||
       sc.ambient.trace_times.size() != sc.ambient.trace_temps.size())) {
    errors.push_back("$.ambient: recorded-trace needs >= 2 matching samples");
  }
  for (std::size_t i = 0; i < sc.clock.unit_offsets.size(); ++i) {
    if (std::fabs(sc.clock.unit_offsets[i]) >= 1e-6) {
      errors.push_back("$.clock.unit_offsets[" + std::to_string(i) +
                       "]: |df/f| must be < 1e-6");
    }
  }
  if (sc.clock.compensator_gain <= 0.0 || sc.clock.compensator_gain > 1.0) {
    errors.push_back("$.clock.compensator_gain: must be in (0, 1]");
  }
  if (sc.thermal_dt <= 0.0) {
    errors.push_back("$.sim.thermal_dt_s: must be > 0");
  }
}

inline Scenario parse_scenario(const json& j) {
  std::vector<std::string> errors;
  Scenario sc = scenario_from_json(j, errors);
  if (errors.empty()) validate_scenario(sc, errors);
  if (!errors.empty()) {
    std::ostringstream oss;
    oss << "scenario validation failed with " << errors.size() << " error(s):";
    for (const auto& e : errors) oss << "\n  - " << e;
    throw ConfigError(oss.str());
  }
  return sc;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario parse error in " + path + ": " + e.what());
  }
  return parse_scenario(j);
}

inline void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write scenario file: " + path);
  out << to_json(sc).dump(2) << "\n";
}

}  // namespace stabsim
