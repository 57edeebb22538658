#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "stabsim/analysis.hpp"
#include "stabsim/campaign.hpp"
#include "stabsim/common.hpp"
#include "stabsim/scenario.hpp"

namespace stabsim {

struct CalibrationTargets {
  double amp_std_pct = 0.15;    // campaign-mean amplitude std, percent
  double phase_std_deg = 0.39;  // campaign-mean phase std, degrees
  double rel_tolerance = 0.02;
  int max_iterations = 48;
  double campaign_duration = 7200.0;  // s, shortened control-on campaign
};

struct CalibrationResult {
  Scenario scenario;     // input scenario with rescaled coefficients
  double amp_scale = 0.0;
  double phase_scale = 0.0;
  double achieved_amp_std_pct = 0.0;
  double achieved_phase_std_deg = 0.0;
};

inline Scenario scale_sensitivities(Scenario sc, double amp_scale,
                                    double phase_scale) {
  for (auto& d : sc.devices) {
    d.sensitivity.amp_coeff *= amp_scale;
    d.sensitivity.phase_coeff *= phase_scale;
  }
  return sc;
}

namespace detail {

struct MeanStds {
  double amp_std_pct = 0.0;
  double phase_std_deg = 0.0;
};

inline MeanStds campaign_mean_stds(const Scenario& sc, double duration) {
  CampaignOptions opts;
  opts.duration_override = duration;
  const CampaignResult run = run_campaign(sc, ControlMode::kOn, sc.seed, opts);
  std::vector<StabilityStats> stats;
  stats.reserve(run.series.size());
  for (const auto& s : run.series) stats.push_back(compute_stats(s));
  const CampaignSummary summary = summarize(stats);
  return {summary.amp_std_pct.mean, summary.phase_std_deg.mean};
}

}  // namespace detail

// Inverse problem: rescale the seed coupling coefficients so the control-on
// campaign statistics land on the targets. Amplitude and phase decouple, so
// two bisections on the respective scale factors share each campaign run.
inline CalibrationResult calibrate_sensitivities(const Scenario& seed_scenario,
                                                 const CalibrationTargets& targets) {
  CalibrationResult result;
  if (targets.amp_std_pct == 0.0 && targets.phase_std_deg == 0.0) {
    result.scenario = scale_sensitivities(seed_scenario, 0.0, 0.0);
    return result;
  }

  // bracket both knobs: double the upper bound until the response overshoots
  double amp_lo = 0.0, amp_hi = 1.0;
  double phase_lo = 0.0, phase_hi = 1.0;
  detail::MeanStds achieved;
  int iterations = 0;
  for (;; ++iterations) {
    if (iterations >= targets.max_iterations) {
      throw CalibrationError(
          "calibrate_sensitivities: bracketing did not overshoot the targets "
          "after " + std::to_string(iterations) + " runs");
    }
    achieved = detail::campaign_mean_stds(
        scale_sensitivities(seed_scenario, amp_hi, phase_hi),
        targets.campaign_duration);
    const bool amp_ok = achieved.amp_std_pct >= targets.amp_std_pct;
    const bool phase_ok = achieved.phase_std_deg >= targets.phase_std_deg;
    if (amp_ok && phase_ok) break;
    if (!amp_ok) amp_hi *= 2.0;
    if (!phase_ok) phase_hi *= 2.0;
  }

  double amp = amp_hi, phase = phase_hi;
  for (; iterations < targets.max_iterations; ++iterations) {
    const double amp_err =
        (achieved.amp_std_pct - targets.amp_std_pct) / targets.amp_std_pct;
    const double phase_err =
        (achieved.phase_std_deg - targets.phase_std_deg) / targets.phase_std_deg;
    if (std::fabs(amp_err) <= targets.rel_tolerance &&
        std::fabs(phase_err) <= targets.rel_tolerance) {
      result.scenario = scale_sensitivities(seed_scenario, amp, phase);
      result.amp_scale = amp;
      result.phase_scale = phase;
      result.achieved_amp_std_pct = achieved.amp_std_pct;
      result.achieved_phase_std_deg = achieved.phase_std_deg;
      return result;
    }
    if (achieved.amp_std_pct > targets.amp_std_pct) {
      amp_hi = amp;
    } else {
      amp_lo = amp;
    }
    if (achieved.phase_std_deg > targets.phase_std_deg) {
      phase_hi = phase;
    } else {
      phase_lo = phase;
    }
    amp = 0.5 * (amp_lo + amp_hi);
    phase = 0.5 * (phase_lo + phase_hi);
    achieved = detail::campaign_mean_stds(
        scale_sensitivities(seed_scenario, amp, phase),
        targets.campaign_duration);
  }
  throw CalibrationError(
      "calibrate_sensitivities: no convergence after " +
      std::to_string(targets.max_iterations) + " runs; residual amp std " +
      std::to_string(achieved.amp_std_pct) + "% (target " +
      std::to_string(targets.amp_std_pct) + "%), phase std " +
      std::to_string(achieved.phase_std_deg) + " deg (target " +
      std::to_string(targets.phase_std_deg) + " deg)");
}

}  // namespace stabsim
