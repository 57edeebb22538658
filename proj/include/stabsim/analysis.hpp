#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stabsim/common.hpp"
#include "stabsim/rfchain.hpp"

namespace stabsim {

struct ChannelSeries {
  ChannelId channel;
  std::vector<double> timestamps;  // s, strictly increasing
  std::vector<double> amplitudes;  // dimensionless
  std::vector<double> phases;      // degrees
};

// Per-channel normalization: amplitudes divided by their own time-series mean.
inline ChannelSeries normalize_amplitude(ChannelSeries series) {
  if (series.amplitudes.empty()) {
    throw AnalysisError("normalize_amplitude: empty series");
  }
  double mean = 0.0;
  for (double a : series.amplitudes) mean += a;
  mean /= static_cast<double>(series.amplitudes.size());
  if (mean <= 0.0) {
    throw AnalysisError("normalize_amplitude: series mean must be > 0");
  }
  for (double& a : series.amplitudes) a /= mean;
  return series;
}

// Adds +-360 multiples so consecutive differences lie in (-180, 180].
inline std::vector<double> unwrap_phase(const std::vector<double>& raw) {
  if (raw.empty()) throw AnalysisError("unwrap_phase: empty input");
  std::vector<double> out;
  out.reserve(raw.size());
  out.push_back(raw.front());
  double shift = 0.0;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const double diff = raw[i] - raw[i - 1];
    if (diff > 180.0) {
      shift -= 360.0;
    } else if (diff <= -180.0) {
      shift += 360.0;
    }
    out.push_back(raw[i] + shift);
  }
  return out;
}

struct StabilityStats {
  ChannelId channel;
  double amp_p2p_pct = 0.0;
  double amp_std_pct = 0.0;
  double phase_p2p_deg = 0.0;
  double phase_std_deg = 0.0;
};

namespace detail {

struct MomentStats {
  double p2p = 0.0;
  double stddev = 0.0;  // population (1/N)
};

inline MomentStats moments(const std::vector<double>& values) {
  double lo = values.front(), hi = values.front(), mean = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    mean += v;
  }
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return {hi - lo, std::sqrt(var)};
}

}  // namespace detail

// Peak-to-peak and population standard deviation: amplitude in percent of the
// per-channel mean, phase in degrees on the unwrapped series referenced to the
// first record.
inline StabilityStats compute_stats(const ChannelSeries& series) {
  if (series.amplitudes.size() < 2) {
    throw AnalysisError("compute_stats: need at least 2 records");
  }
  const ChannelSeries normalized = normalize_amplitude(series);
  std::vector<double> phases = unwrap_phase(series.phases);
  const double first = phases.front();
  for (double& p : phases) p -= first;
  const auto amp = detail::moments(normalized.amplitudes);
  const auto phase = detail::moments(phases);
  return {series.channel, amp.p2p * 100.0, amp.stddev * 100.0, phase.p2p,
          phase.stddev};
}

struct StatSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct CampaignSummary {
  StatSummary amp_p2p_pct;
  StatSummary amp_std_pct;
  StatSummary phase_p2p_deg;
  StatSummary phase_std_deg;
};

inline CampaignSummary summarize(const std::vector<StabilityStats>& stats) {
  if (stats.empty()) throw AnalysisError("summarize: empty stats list");
  auto fold = [&](auto field) {
    StatSummary s{field(stats.front()), field(stats.front()), 0.0};
    for (const auto& st : stats) {
      const double v = field(st);
      s.min = std::min(s.min, v);
      s.max = std::max(s.max, v);
      s.mean += v;
    }
    s.mean /= static_cast<double>(stats.size());
    return s;
  };
  return {fold([](const StabilityStats& s) { return s.amp_p2p_pct; }),
          fold([](const StabilityStats& s) { return s.amp_std_pct; }),
          fold([](const StabilityStats& s) { return s.phase_p2p_deg; }),
          fold([](const StabilityStats& s) { return s.phase_std_deg; })};
}

}  // namespace stabsim
