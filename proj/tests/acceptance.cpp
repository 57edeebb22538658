// Acceptance suite: one line per criterion, PASS or FAIL, exit 0 only if all
// pass. Criteria 3, 4 and 10 run full-length campaigns on the shipped default
// scenario and take tens of seconds.
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stabsim/app.hpp"
#include "stabsim/campaign.hpp"
#include "stabsim/default_scenario.hpp"
#include "stabsim/fidelity.hpp"
#include "stabsim/rng.hpp"

using namespace stabsim;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::cout << "criterion " << criterion << " (" << what << "): "
            << (ok ? "PASS" : "FAIL") << std::endl;
  if (!ok) ++failures;
}

std::string scenario_path() {
  return std::string(STABSIM_SCENARIO_DIR) + "/default.json";
}

// 1. headline infidelity magnitudes
void criterion_headline() {
  const double amp = amp_error_infidelity(0.0022).exact;
  const double phase = phase_error_infidelity(7.67e-3).exact;
  report(1, "headline infidelities",
         amp >= 1.9e-6 && amp <= 2.1e-6 && phase >= 1.9e-5 && phase <= 2.1e-5);
}

// 2. closed forms vs explicit 2x2 matrices
void criterion_matrix_oracle() {
  const auto ideal = x_rotation(kPi / 2.0);
  Rng rng(1001);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const double eps = rng.uniform() - 0.5;
    const double amp_oracle =
        1.0 - avg_fidelity(ideal, x_rotation((kPi / 2.0) * (1.0 + eps)));
    if (std::fabs(amp_error_infidelity(eps).exact - amp_oracle) > 1e-12) {
      ok = false;
    }
    const double phi = kPi * (rng.uniform() - 0.5);
    const double phase_oracle =
        1.0 - avg_fidelity(ideal, xy_axis_rotation(kPi / 2.0, phi));
    if (std::fabs(phase_error_infidelity(phi).exact - phase_oracle) > 1e-12) {
      ok = false;
    }
  }
  report(2, "formula-matrix oracle", ok);
}

// 3 + 4. full-length paired campaigns on the shipped calibration
void criteria_campaign_brackets() {
  const Scenario sc = load_scenario(scenario_path());

  const auto on = run_campaign(sc, ControlMode::kOn, sc.seed);
  std::vector<StabilityStats> on_stats;
  for (const auto& s : on.series) on_stats.push_back(compute_stats(s));
  bool brackets = on_stats.size() == 15;
  for (const auto& st : on_stats) {
    if (st.amp_std_pct < 0.05 || st.amp_std_pct > 0.30) brackets = false;
    if (st.phase_std_deg < 0.25 || st.phase_std_deg > 0.55) brackets = false;
  }
  report(3, "stability brackets, control on", brackets);

  const auto off = run_campaign(sc, ControlMode::kOff, sc.seed);
  std::vector<StabilityStats> off_stats;
  for (const auto& s : off.series) off_stats.push_back(compute_stats(s));
  const auto on_sum = summarize(on_stats);
  const auto off_sum = summarize(off_stats);
  const double amp_ratio = off_sum.amp_std_pct.mean / on_sum.amp_std_pct.mean;
  const double phase_ratio =
      off_sum.phase_std_deg.mean / on_sum.phase_std_deg.mean;
  report(4, "control-off/on std ratio >= 2",
         amp_ratio >= 2.0 && phase_ratio >= 2.0);
}

// 5. PI regulation: settling and sinusoid rejection
void criterion_pi_regulation() {
  const double dt = 0.1;
  auto run = [&](double amp, bool controlled, double duration, double* p2p) {
    ThermalNode node{"dev", 29.0, 60.0, 3.0, 30.0, 1.5};
    PiLoop loop{2.0, 0.05, 33.5, 0.0, 0.0, 1.0, LoopPolarity::kHeating};
    const double frozen =
        (node.ambient_coupling * (33.5 - 29.0) - node.self_heating) /
        node.max_heater_power;
    double t = 0.0, lo = 1e300, hi = -1e300;
    while (t < duration) {
      const double ambient = 29.0 + amp * std::sin(2.0 * kPi * t / 1800.0);
      double duty = frozen;
      if (controlled) {
        const auto r = pi_update(loop, node.temperature, dt);
        loop = r.loop;
        duty = r.duty;
      }
      node = step_plant(node, duty * node.max_heater_power, ambient, dt);
      t += dt;
      if (t > duration / 2.0) {
        lo = std::min(lo, node.temperature);
        hi = std::max(hi, node.temperature);
      }
    }
    if (p2p) *p2p = hi - lo;
    return node.temperature;
  };
  const double settled = run(0.0, true, 2000.0, nullptr);
  double controlled_p2p = 0.0, uncontrolled_p2p = 0.0;
  run(1.5, true, 7200.0, &controlled_p2p);
  run(1.5, false, 7200.0, &uncontrolled_p2p);
  report(5, "PI settling and 10x ambient rejection",
         std::fabs(settled - 33.5) < 0.01 &&
             uncontrolled_p2p >= 10.0 * controlled_p2p);
}

// 6. conversion roundtrip and bitwise LO-phase independence
void criterion_signal_chain() {
  SignalPath path;
  path.nco_freq = 5.0e9;
  const auto env = synthesize_pulse(path, 100e-6, {0.97, 12.0}, 2.0e6,
                                    to_ticks(1.25));
  bool ok = true;
  const LoState lo{"lo", 2.5e9, 37.0};
  const auto back = downconvert(upconvert(env, lo), lo).materialize();
  for (std::size_t k = 0; k < back.size(); ++k) {
    if (std::abs(back[k] - env.raw()[k]) > 1e-12 * std::abs(env.raw()[k])) {
      ok = false;
    }
  }
  for (double phase : {0.0, 37.0, 180.0}) {
    const LoState lo2{"lo", 2.5e9, phase};
    if (downconvert(upconvert(env, lo2), lo2).materialize() != env.raw()) {
      ok = false;
    }
  }
  report(6, "roundtrip and bitwise shared-LO loopback", ok);
}

// 7. statistics vs an independent brute-force fold
void criterion_stats_oracle() {
  Rng rng(2002);
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 60.0);
    ChannelSeries series;
    series.channel = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      series.timestamps.push_back(static_cast<double>(i));
      series.amplitudes.push_back(0.9 + 0.2 * rng.uniform());
      series.phases.push_back(10.0 * (rng.uniform() - 0.5));
    }
    const auto st = compute_stats(series);

    double mean = 0.0;
    for (double a : series.amplitudes) mean += a;
    mean /= static_cast<double>(n);
    double alo = 1e300, ahi = -1e300, avar = 0.0;
    for (double a : series.amplitudes) {
      const double v = a / mean;
      alo = std::min(alo, v);
      ahi = std::max(ahi, v);
      avar += (v - 1.0) * (v - 1.0);
    }
    avar /= static_cast<double>(n);
    if (std::fabs(st.amp_p2p_pct - (ahi - alo) * 100.0) > 1e-12) ok = false;
    if (std::fabs(st.amp_std_pct - std::sqrt(avar) * 100.0) > 1e-10) ok = false;

    double pmean = 0.0, plo = 1e300, phi = -1e300;
    for (double p : series.phases) {
      const double v = p - series.phases.front();
      pmean += v;
      plo = std::min(plo, v);
      phi = std::max(phi, v);
    }
    pmean /= static_cast<double>(n);
    double pvar = 0.0;
    for (double p : series.phases) {
      const double v = p - series.phases.front() - pmean;
      pvar += v * v;
    }
    pvar /= static_cast<double>(n);
    if (std::fabs(st.phase_p2p_deg - (phi - plo)) > 1e-12) ok = false;
    if (std::fabs(st.phase_std_deg - std::sqrt(pvar)) > 1e-10) ok = false;

    const auto once = normalize_amplitude(series);
    const auto twice = normalize_amplitude(once);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::fabs(twice.amplitudes[i] - once.amplitudes[i]) > 1e-12) {
        ok = false;
      }
    }
  }
  report(7, "statistics brute-force oracle", ok);
}

// 8. randomized schedule disjointness and per-round pulse counts
void criterion_schedule() {
  Rng rng(3003);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    MeasurementPlan plan;
    plan.units = 1 + static_cast<int>(rng.uniform() * 4.0);
    plan.channels_per_unit = 1 + static_cast<int>(rng.uniform() * 6.0);
    plan.pulse_duration = 20e-6 + 200e-6 * rng.uniform();
    plan.pulse_gap = 300e-6 * rng.uniform();
    const double slots = (plan.pulse_duration + plan.pulse_gap) * plan.units *
                         plan.channels_per_unit;
    plan.round_period = slots * (1.0 + 3.0 * rng.uniform());
    plan.total_duration = plan.round_period * (3.0 + 5.0 * rng.uniform());
    const auto schedule = build_schedule(plan);
    const int per_round = plan.units * plan.channels_per_unit;
    if (schedule.size() !=
        static_cast<std::size_t>(round_count(plan) * per_round)) {
      ok = false;
    }
    const Tick len = to_ticks(plan.pulse_duration);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      if (i > 0 && schedule[i].start < schedule[i - 1].start + len) ok = false;
      if (schedule[i].round !=
          static_cast<std::int64_t>(i) / per_round) {
        ok = false;
      }
    }
  }
  report(8, "randomized schedule properties", ok);
}

// 9. counter skew and compensator arithmetic
void criterion_clock() {
  bool ok = counter_skew({0.0, 1.0e-9}, 86400.0) == 5;
  double offset = 1.0e-8;
  for (int i = 0; i < 7; ++i) offset = compensate(offset, offset, 0.5);
  if (std::fabs(offset) >= 1.0e-10) ok = false;
  report(9, "clock skew and compensation", ok);
}

// 10. byte-identical campaign CSVs from two run invocations
void criterion_determinism() {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "stabsim_acceptance";
  fs::remove_all(base);
  RunConfig cfg;
  cfg.scenario_path = scenario_path();
  cfg.mode = ControlMode::kOn;
  cfg.collect_trace = false;
  std::ostringstream sink;
  bool ok = true;
  for (const char* name : {"a", "b"}) {
    cfg.out_dir = (base / name).string();
    if (cmd_run(cfg, sink) != kExitOk) ok = false;
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
  };
  const std::string a = slurp(base / "a" / "campaign.csv");
  const std::string b = slurp(base / "b" / "campaign.csv");
  if (a.empty() || a != b) ok = false;
  fs::remove_all(base);
  report(10, "byte-identical campaign CSVs", ok);
}

}  // namespace

int main() {
  criterion_headline();
  criterion_matrix_oracle();
  criteria_campaign_brackets();
  criterion_pi_regulation();
  criterion_signal_chain();
  criterion_stats_oracle();
  criterion_schedule();
  criterion_clock();
  criterion_determinism();
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
