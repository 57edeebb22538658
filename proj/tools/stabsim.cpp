#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stabsim/app.hpp"
#include "stabsim/default_scenario.hpp"

namespace {

std::string default_out_dir() {
  if (const char* env = std::getenv("STABSIM_OUT")) return env;
  return "out";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital twin of a thermally stabilized multichannel microwave "
               "controller: campaign simulation, stability statistics and "
               "gate-error reports"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = default_out_dir();
  std::string control = "on";
  std::optional<std::uint64_t> seed;
  std::optional<double> duration;
  bool dump_envelopes = false;
  bool force_dump = false;

  auto* run = app.add_subcommand("run", "run a measurement campaign");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--seed", seed, "override the scenario seed");
  run->add_option("--control", control, "thermal control mode")
      ->check(CLI::IsMember({"on", "off"}));
  run->add_option("--duration", duration, "shorten the campaign to this many seconds");
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--dump-envelopes", dump_envelopes, "write raw captured envelopes");
  run->add_flag("--force-dump", force_dump, "bypass the envelope dump volume guard");

  std::string run_a, run_b;
  auto* compare = app.add_subcommand("compare", "compare two run directories");
  compare->add_option("run_a", run_a, "first run directory")->required();
  compare->add_option("run_b", run_b, "second run directory")->required();
  compare->add_option("--out", out_dir, "output directory");

  std::string stats_csv;
  double budget = 1e-4;
  auto* fidelity = app.add_subcommand(
      "fidelity", "gate infidelities from a campaign stats CSV");
  fidelity->add_option("stats", stats_csv, "stats CSV from a run")->required();
  fidelity->add_option("--budget", budget, "per-channel infidelity budget");
  fidelity->add_option("--out", out_dir, "output directory");

  stabsim::CalibrationTargets targets;
  auto* calibrate = app.add_subcommand(
      "calibrate", "rescale coupling coefficients to hit target statistics");
  calibrate->add_option("--scenario", scenario_path, "scenario JSON file")
      ->required();
  calibrate->add_option("--amp-std", targets.amp_std_pct,
                        "target mean amplitude std, percent");
  calibrate->add_option("--phase-std", targets.phase_std_deg,
                        "target mean phase std, degrees");
  calibrate->add_option("--duration", targets.campaign_duration,
                        "campaign seconds per calibration run");
  calibrate->add_option("--out", out_dir, "output directory");

  double skew_duration = 86400.0;
  double skew_interval = 3600.0;
  auto* clock_skew = app.add_subcommand(
      "clock-skew", "global-counter skew report across units");
  clock_skew->add_option("--scenario", scenario_path, "scenario JSON file")
      ->required();
  clock_skew->add_option("--duration", skew_duration, "report horizon, seconds");
  clock_skew->add_option("--interval", skew_interval, "report step, seconds");
  clock_skew->add_option("--out", out_dir, "output directory");

  std::string init_path;
  auto* init = app.add_subcommand(
      "init-scenario", "write the built-in default scenario to a file");
  init->add_option("path", init_path, "destination JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : stabsim::kExitUsageError;
  }

  try {
    if (run->parsed()) {
      stabsim::RunConfig cfg;
      cfg.scenario_path = scenario_path;
      cfg.mode = control == "on" ? stabsim::ControlMode::kOn
                                 : stabsim::ControlMode::kOff;
      cfg.seed = seed;
      cfg.duration = duration;
      cfg.out_dir = out_dir;
      cfg.dump_envelopes = dump_envelopes;
      cfg.force_dump = force_dump;
      return stabsim::cmd_run(cfg);
    }
    if (compare->parsed()) return stabsim::cmd_compare(run_a, run_b, out_dir);
    if (fidelity->parsed())
      return stabsim::cmd_fidelity(stats_csv, budget, out_dir);
    if (calibrate->parsed())
      return stabsim::cmd_calibrate(scenario_path, targets, out_dir);
    if (clock_skew->parsed())
      return stabsim::cmd_clock_skew(scenario_path, skew_duration,
                                     skew_interval, out_dir);
    if (init->parsed()) {
      stabsim::save_scenario(stabsim::default_scenario(), init_path);
      std::cout << "wrote " << init_path << "\n";
      return stabsim::kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stabsim::kExitDomainError;
  }
  return stabsim::kExitUsageError;
}
