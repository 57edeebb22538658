#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabsim/calibrate.hpp"
#include "stabsim/campaign.hpp"
#include "stabsim/clocktree.hpp"
#include "stabsim/report.hpp"
#include "stabsim/scenario.hpp"

namespace stabsim {

constexpr const char* kVersion = "1.0.0";

// exit codes: 0 success, 1 domain error, 2 usage error
constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct RunConfig {
  std::string scenario_path;
  ControlMode mode = ControlMode::kOn;
  std::optional<std::uint64_t> seed;
  std::optional<double> duration;  // s
  std::string out_dir = "out";
  bool dump_envelopes = false;
  bool force_dump = false;
  bool collect_trace = true;
};

namespace detail {

inline std::string now_string() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

inline void write_manifest(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write manifest: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace detail

constexpr std::size_t kEnvelopeDumpRowLimit = 10'000'000;

inline int cmd_run(const RunConfig& cfg, std::ostream& log = std::cout) {
  const Scenario base = load_scenario(cfg.scenario_path);
  Scenario sc = base;
  if (cfg.seed) sc.seed = *cfg.seed;
  const std::uint64_t hash = scenario_hash(base);

  const std::filesystem::path out(cfg.out_dir);
  std::filesystem::create_directories(out);

  json manifest = {{"scenario", cfg.scenario_path},
                   {"scenario_hash", hash},
                   {"seed", sc.seed},
                   {"version", kVersion},
                   {"control", control_mode_name(cfg.mode)},
                   {"start_time", detail::now_string()},
                   {"status", "running"}};
  if (cfg.duration) manifest["duration_override_s"] = *cfg.duration;
  detail::write_manifest(out / "manifest.json", manifest);

  CampaignOptions opts;
  opts.duration_override = cfg.duration;
  opts.collect_trace = cfg.collect_trace;

  std::ofstream envelope_out;
  if (cfg.dump_envelopes) {
    MeasurementPlan plan = sc.plan;
    if (cfg.duration) plan.total_duration = *cfg.duration;
    const std::size_t rows = static_cast<std::size_t>(
        round_count(plan) * plan.units * plan.channels_per_unit *
        std::llround(plan.pulse_duration * sc.capture.sample_rate_hz));
    if (rows > kEnvelopeDumpRowLimit && !cfg.force_dump) {
      log << "error: envelope dump would write " << rows
          << " rows (limit " << kEnvelopeDumpRowLimit
          << "); pass --force-dump to override\n";
      return kExitDomainError;
    }
    envelope_out.open(out / "envelopes.csv");
    envelope_out << "unit,channel,t_s,re,im\n";
    opts.envelope_sink = [&](const ChannelId& ch, const ComplexEnvelope& env) {
      const auto samples = env.materialize();
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const double t = to_seconds(
            env.start_tick() + static_cast<Tick>(k) * env.sample_period());
        envelope_out << ch.unit << ',' << ch.channel << ',' << detail::fmt(t)
                     << ',' << detail::fmt(samples[k].real()) << ','
                     << detail::fmt(samples[k].imag()) << '\n';
      }
    };
  }

  try {
    const CampaignResult run = run_campaign(sc, cfg.mode, sc.seed, opts);
    write_campaign_csv((out / "campaign.csv").string(), run.records);
    write_series_csv((out / "series.csv").string(), run.series);
    if (cfg.collect_trace) {
      write_trace_csv((out / "thermal_trace.csv").string(), run.thermal_trace);
    }
    std::vector<StabilityStats> stats;
    for (const auto& s : run.series) stats.push_back(compute_stats(s));
    write_stats_csv((out / "stats.csv").string(), stats);
    const CampaignSummary summary = summarize(stats);
    const InfidelityReport infid = infidelity_report(stats);
    write_infidelity_csv((out / "infidelity.csv").string(), infid);
    {
      std::ofstream txt(out / "summary.txt");
      txt << stats_table_text(stats) << "\n" << summary_text(summary) << "\n";
    }
    log << stats_table_text(stats) << "\n" << summary_text(summary) << "\n";
    manifest["status"] = "ok";
  } catch (const std::exception& e) {
    manifest["status"] = "failed";
    manifest["error"] = e.what();
    manifest["end_time"] = detail::now_string();
    detail::write_manifest(out / "manifest.json", manifest);
    log << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  manifest["end_time"] = detail::now_string();
  detail::write_manifest(out / "manifest.json", manifest);
  return kExitOk;
}

inline std::uint64_t manifest_hash(const std::filesystem::path& run_dir) {
  std::ifstream in(run_dir / "manifest.json");
  if (!in) throw ConfigError("cannot open manifest in " + run_dir.string());
  json j = json::parse(in);
  return j.at("scenario_hash").get<std::uint64_t>();
}

inline int cmd_compare(const std::string& run_a, const std::string& run_b,
                       const std::string& out_dir,
                       std::ostream& log = std::cout) {
  try {
    if (manifest_hash(run_a) != manifest_hash(run_b)) {
      log << "error: runs were produced from different scenarios\n";
      return kExitDomainError;
    }
    const auto stats_a =
        read_stats_csv((std::filesystem::path(run_a) / "stats.csv").string());
    const auto stats_b =
        read_stats_csv((std::filesystem::path(run_b) / "stats.csv").string());
    const CompareReport report = compare_stats(stats_a, stats_b);
    std::filesystem::create_directories(out_dir);
    write_compare_csv(
        (std::filesystem::path(out_dir) / "compare.csv").string(), report);
    log << "mean std ratio (a/b): amplitude "
        << detail::fmt(report.mean_amp_std_ratio, 4) << ", phase "
        << detail::fmt(report.mean_phase_std_ratio, 4) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

inline int cmd_fidelity(const std::string& stats_csv, double budget,
                        const std::string& out_dir,
                        std::ostream& log = std::cout) {
  try {
    const auto stats = read_stats_csv(stats_csv);
    const InfidelityReport report = infidelity_report(stats, budget);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_infidelity_csv(
          (std::filesystem::path(out_dir) / "infidelity.csv").string(), report);
    }
    for (const auto& r : report.rows) {
      log << "unit " << r.channel.unit << " ch " << r.channel.channel
          << ": amp " << detail::fmt(r.result.amplitude.exact, 4) << ", phase "
          << detail::fmt(r.result.phase.exact, 4)
          << (r.over_budget ? "  OVER BUDGET" : "") << "\n";
    }
    log << "worst amplitude infidelity "
        << detail::fmt(report.worst_amp.result.amplitude.exact, 4)
        << " (unit " << report.worst_amp.channel.unit << " ch "
        << report.worst_amp.channel.channel << "), worst phase infidelity "
        << detail::fmt(report.worst_phase.result.phase.exact, 4) << " (unit "
        << report.worst_phase.channel.unit << " ch "
        << report.worst_phase.channel.channel << "), budget "
        << detail::fmt(budget, 4) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

inline int cmd_calibrate(const std::string& scenario_path,
                         const CalibrationTargets& targets,
                         const std::string& out_dir,
                         std::ostream& log = std::cout) {
  try {
    const Scenario sc = load_scenario(scenario_path);
    const CalibrationResult result = calibrate_sensitivities(sc, targets);
    std::filesystem::create_directories(out_dir);
    write_calibration_csv(
        (std::filesystem::path(out_dir) / "calibration.csv").string(),
        result.scenario.devices);
    save_scenario(result.scenario,
                  (std::filesystem::path(out_dir) / "scenario_calibrated.json")
                      .string());
    log << "calibrated: amp scale " << detail::fmt(result.amp_scale, 6)
        << " (mean std " << detail::fmt(result.achieved_amp_std_pct, 4)
        << "%), phase scale " << detail::fmt(result.phase_scale, 6)
        << " (mean std " << detail::fmt(result.achieved_phase_std_deg, 4)
        << " deg)\n";
    return kExitOk;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

inline int cmd_clock_skew(const std::string& scenario_path, double duration,
                          double report_interval, const std::string& out_dir,
                          std::ostream& log = std::cout) {
  try {
    const Scenario sc = load_scenario(scenario_path);
    if (sc.clock.unit_offsets.size() < 2) {
      log << "error: clock block needs at least 2 unit offsets\n";
      return kExitDomainError;
    }
    std::filesystem::create_directories(out_dir);
    auto out = detail::open_out(
        (std::filesystem::path(out_dir) / "clock_skew.csv").string());
    out << "t_s,max_skew_ticks\n";
    std::int64_t worst = 0;
    for (double t = 0.0; t <= duration; t += report_interval) {
      const std::int64_t skew = counter_skew(sc.clock.unit_offsets, t);
      worst = std::max(worst, skew);
      out << detail::fmt(t) << ',' << skew << '\n';
    }
    log << "max counter skew over " << detail::fmt(duration, 6) << " s: "
        << worst << " ticks\n";
    return kExitOk;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace stabsim
