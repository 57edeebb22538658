#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabsim/analysis.hpp"
#include "stabsim/campaign.hpp"
#include "stabsim/common.hpp"
#include "stabsim/fidelity.hpp"

namespace stabsim {

namespace detail {

inline std::string fmt(double v, int precision = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write output file: " + path);
  return out;
}

}  // namespace detail

inline void write_campaign_csv(const std::string& path,
                               const std::vector<PulseRecord>& records) {
  auto out = detail::open_out(path);
  out << "unit,channel,round,t_s,amp,phase_deg\n";
  for (const auto& r : records) {
    out << r.channel.unit << ',' << r.channel.channel << ',' << r.round << ','
        << detail::fmt(r.timestamp) << ',' << detail::fmt(r.mean_amplitude)
        << ',' << detail::fmt(r.mean_phase) << '\n';
  }
}

// Long-format series for plotting: one row per record with the normalized
// amplitude and first-sample-referenced unwrapped phase.
inline void write_series_csv(const std::string& path,
                             const std::vector<ChannelSeries>& series) {
  auto out = detail::open_out(path);
  out << "unit,channel,t_s,norm_amp,phase_rel_deg\n";
  for (const auto& s : series) {
    const ChannelSeries normalized = normalize_amplitude(s);
    std::vector<double> phases = unwrap_phase(s.phases);
    const double first = phases.front();
    for (std::size_t i = 0; i < s.timestamps.size(); ++i) {
      out << s.channel.unit << ',' << s.channel.channel << ','
          << detail::fmt(s.timestamps[i]) << ','
          << detail::fmt(normalized.amplitudes[i]) << ','
          << detail::fmt(phases[i] - first) << '\n';
    }
  }
}

inline void write_trace_csv(const std::string& path,
                            const std::vector<TraceRow>& trace) {
  auto out = detail::open_out(path);
  out << "t_s,node_id,temp_c,duty\n";
  for (const auto& row : trace) {
    out << detail::fmt(row.t) << ',' << row.node_id << ','
        << detail::fmt(row.temp) << ',' << detail::fmt(row.duty) << '\n';
  }
}

inline void write_stats_csv(const std::string& path,
                            const std::vector<StabilityStats>& stats) {
  auto out = detail::open_out(path);
  out << "unit,channel,amp_p2p_pct,amp_std_pct,phase_p2p_deg,phase_std_deg\n";
  for (const auto& s : stats) {
    out << s.channel.unit << ',' << s.channel.channel << ','
        << detail::fmt(s.amp_p2p_pct, 6) << ',' << detail::fmt(s.amp_std_pct, 6)
        << ',' << detail::fmt(s.phase_p2p_deg, 6) << ','
        << detail::fmt(s.phase_std_deg, 6) << '\n';
  }
}

inline std::vector<StabilityStats> read_stats_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stats file: " + path);
  std::vector<StabilityStats> stats;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;  // header
    StabilityStats s;
    std::istringstream ss(line);
    std::string field;
    auto next = [&](const char* what) {
      if (!std::getline(ss, field, ',')) {
        throw ConfigError(path + ":" + std::to_string(line_no) +
                          ": missing field " + what);
      }
      return field;
    };
    try {
      s.channel.unit = std::stoi(next("unit"));
      s.channel.channel = std::stoi(next("channel"));
      s.amp_p2p_pct = std::stod(next("amp_p2p_pct"));
      s.amp_std_pct = std::stod(next("amp_std_pct"));
      s.phase_p2p_deg = std::stod(next("phase_p2p_deg"));
      s.phase_std_deg = std::stod(next("phase_std_deg"));
    } catch (const std::invalid_argument&) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": malformed numeric field '" + field + "'");
    }
    stats.push_back(s);
  }
  if (stats.empty()) throw ConfigError(path + ": no stats rows");
  return stats;
}

inline std::string stats_table_text(const std::vector<StabilityStats>& stats) {
  std::ostringstream out;
  out << "Unit  Ch  Amp p2p (%)  Amp std (%)  Phase p2p (deg)  Phase std (deg)\n";
  for (const auto& s : stats) {
    out << std::setw(4) << s.channel.unit << std::setw(4) << s.channel.channel
        << std::fixed << std::setprecision(3) << std::setw(13) << s.amp_p2p_pct
        << std::setw(13) << s.amp_std_pct << std::setw(17) << s.phase_p2p_deg
        << std::setw(17) << s.phase_std_deg << '\n';
    out.unsetf(std::ios::fixed);
  }
  return out.str();
}

inline std::string summary_text(const CampaignSummary& summary) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "amplitude std " << summary.amp_std_pct.min << "%-"
      << summary.amp_std_pct.max << "% (mean " << summary.amp_std_pct.mean
      << "%), phase std " << summary.phase_std_deg.min << " deg-"
      << summary.phase_std_deg.max << " deg (mean "
      << summary.phase_std_deg.mean << " deg)";
  return out.str();
}

struct ChannelRatio {
  ChannelId channel;
  double amp_std = 0.0;
  double amp_p2p = 0.0;
  double phase_std = 0.0;
  double phase_p2p = 0.0;
};

struct CompareReport {
  std::vector<ChannelRatio> ratios;  // run_a stat / run_b stat, per channel
  double mean_amp_std_ratio = 0.0;
  double mean_phase_std_ratio = 0.0;
};

inline CompareReport compare_stats(std::vector<StabilityStats> a,
                                   std::vector<StabilityStats> b) {
  auto order = [](const StabilityStats& x, const StabilityStats& y) {
    return std::pair(x.channel.unit, x.channel.channel) <
           std::pair(y.channel.unit, y.channel.channel);
  };
  std::sort(a.begin(), a.end(), order);
  std::sort(b.begin(), b.end(), order);
  if (a.size() != b.size()) {
    throw ConfigError("compare: channel counts differ (" +
                      std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
  CompareReport report;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].channel.unit != b[i].channel.unit ||
        a[i].channel.channel != b[i].channel.channel) {
      throw ConfigError("compare: channel sets differ");
    }
    report.ratios.push_back({a[i].channel,
                             a[i].amp_std_pct / b[i].amp_std_pct,
                             a[i].amp_p2p_pct / b[i].amp_p2p_pct,
                             a[i].phase_std_deg / b[i].phase_std_deg,
                             a[i].phase_p2p_deg / b[i].phase_p2p_deg});
    report.mean_amp_std_ratio += report.ratios.back().amp_std;
    report.mean_phase_std_ratio += report.ratios.back().phase_std;
  }
  report.mean_amp_std_ratio /= static_cast<double>(report.ratios.size());
  report.mean_phase_std_ratio /= static_cast<double>(report.ratios.size());
  return report;
}

inline void write_compare_csv(const std::string& path,
                              const CompareReport& report) {
  auto out = detail::open_out(path);
  out << "unit,channel,amp_std_ratio,amp_p2p_ratio,phase_std_ratio,"
         "phase_p2p_ratio\n";
  for (const auto& r : report.ratios) {
    out << r.channel.unit << ',' << r.channel.channel << ','
        << detail::fmt(r.amp_std, 6) << ',' << detail::fmt(r.amp_p2p, 6) << ','
        << detail::fmt(r.phase_std, 6) << ',' << detail::fmt(r.phase_p2p, 6)
        << '\n';
  }
}

struct InfidelityRow {
  ChannelId channel;
  ChannelInfidelity result;
  bool over_budget = false;
};

struct InfidelityReport {
  std::vector<InfidelityRow> rows;
  InfidelityRow worst_amp;
  InfidelityRow worst_phase;
  double budget = 1e-4;
};

inline InfidelityReport infidelity_report(
    const std::vector<StabilityStats>& stats, double budget = 1e-4) {
  if (stats.empty()) throw AnalysisError("infidelity_report: empty stats");
  InfidelityReport report;
  report.budget = budget;
  for (const auto& s : stats) {
    InfidelityRow row;
    row.channel = s.channel;
    row.result = infidelity_from_stats(s.amp_std_pct, s.phase_std_deg);
    row.over_budget = row.result.amplitude.exact > budget ||
                      row.result.phase.exact > budget;
    report.rows.push_back(row);
  }
  report.worst_amp = *std::max_element(
      report.rows.begin(), report.rows.end(), [](const auto& x, const auto& y) {
        return x.result.amplitude.exact < y.result.amplitude.exact;
      });
  report.worst_phase = *std::max_element(
      report.rows.begin(), report.rows.end(), [](const auto& x, const auto& y) {
        return x.result.phase.exact < y.result.phase.exact;
      });
  return report;
}

inline void write_infidelity_csv(const std::string& path,
                                 const InfidelityReport& report) {
  auto out = detail::open_out(path);
  out << "unit,channel,amp_infidelity,amp_infidelity_small_angle,"
         "phase_infidelity,phase_infidelity_small_angle,over_budget\n";
  for (const auto& r : report.rows) {
    out << r.channel.unit << ',' << r.channel.channel << ','
        << detail::fmt(r.result.amplitude.exact, 6) << ','
        << detail::fmt(r.result.amplitude.small_angle, 6) << ','
        << detail::fmt(r.result.phase.exact, 6) << ','
        << detail::fmt(r.result.phase.small_angle, 6) << ','
        << (r.over_budget ? 1 : 0) << '\n';
  }
}

inline void write_calibration_csv(
    const std::string& path, const std::vector<DeviceConfig>& devices) {
  auto out = detail::open_out(path);
  out << "device_id,amp_coeff_per_c,phase_coeff_deg_per_c\n";
  for (const auto& d : devices) {
    out << d.sensitivity.device_id << ','
        << detail::fmt(d.sensitivity.amp_coeff) << ','
        << detail::fmt(d.sensitivity.phase_coeff) << '\n';
  }
}

}  // namespace stabsim
