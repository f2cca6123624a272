// Copyright 2026 The Kickgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kick/io.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace kick {
namespace {

using nlohmann::json;

constexpr int kCsvDecimals = 6;
constexpr int kSummaryDecimals = 9;
constexpr std::size_t kKeyWidth = 16;

json SegmentToJson(const PhaseSegment& s) {
  return {{"phase", PhaseName(s.phase)},  {"t_start", s.t_start},
          {"duration", s.duration},       {"theta_start", s.theta_start},
          {"omega_start", s.omega_start}, {"alpha", s.alpha}};
}

[[noreturn]] void BadPlan(const std::string& what) {
  throw InvalidParamError("plan", "malformed plan file: " + what);
}

std::optional<SwingBranch> ParseBranch(std::string_view name) {
  for (SwingBranch b : {SwingBranch::kSwingUp, SwingBranch::kCoast,
                        SwingBranch::kReducedAcceleration}) {
    if (SwingBranchName(b) == name) return b;
  }
  return std::nullopt;
}

struct Line {
  std::string name;
  double value;
  std::string_view unit;
  bool scientific = false;
};

std::string FormatScientific(double value) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value, std::chars_format::scientific, 3);
  if (ec != std::errc()) return "nan";
  return std::string(buffer.data(), end);
}

// Left-aligned `name = ` prefix shared by every key-value line.
std::string Key(std::string_view name) {
  std::string key(name);
  key.resize(std::max<std::size_t>(key.size(), kKeyWidth), ' ');
  return key + " = ";
}

void AppendLines(std::ostringstream& out, std::span<const Line> lines) {
  for (const Line& line : lines) {
    out << Key(line.name)
        << (line.scientific ? FormatScientific(line.value)
                            : FormatFixed(line.value, kSummaryDecimals));
    if (!line.unit.empty()) out << ' ' << line.unit;
    out << '\n';
  }
}

}  // namespace

std::string FormatFixed(double value, int decimals) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "nan";
  std::string text(buffer.data(), end);
  if (text.front() == '-' &&
      text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

void WriteSamplesCsv(std::ostream& out,
                     std::span<const TrajectorySample> samples) {
  out << kSampleCsvHeader << '\n';
  for (const TrajectorySample& s : samples) {
    out << FormatFixed(s.t, kCsvDecimals) << ',' << PhaseName(s.phase) << ','
        << FormatFixed(s.theta, kCsvDecimals) << ','
        << FormatFixed(s.omega, kCsvDecimals) << ','
        << FormatFixed(s.alpha, kCsvDecimals) << ','
        << FormatFixed(s.x_offset, kCsvDecimals) << ','
        << FormatFixed(s.z_offset, kCsvDecimals) << '\n';
  }
}

void WriteSamplesJson(std::ostream& out,
                      std::span<const TrajectorySample> samples) {
  json rows = json::array();
  for (const TrajectorySample& s : samples) {
    rows.push_back({{"t", s.t},
                    {"phase", PhaseName(s.phase)},
                    {"theta_l", s.theta},
                    {"omega_l", s.omega},
                    {"alpha", s.alpha},
                    {"x_o", s.x_offset},
                    {"z_o", s.z_offset}});
  }
  out << rows.dump(2) << '\n';
}

std::string PlanToJson(const KickPlan& plan) {
  const PlanValues& v = plan.values();
  json segments = json::array();
  for (const PhaseSegment& s : plan.segments()) {
    segments.push_back(SegmentToJson(s));
  }
  json doc = {{"format", "kickplan"},
              {"version", 1},
              {"branch", SwingBranchName(v.branch)},
              {"alpha_k", v.kick_acceleration},
              {"alpha_swing", v.swing_acceleration},
              {"omega_k", v.kick_velocity},
              {"theta_k", v.kick_angle},
              {"theta_sw", v.swing_angle},
              {"theta_pre", v.pre_swing_angle},
              {"theta_ret", v.return_angle},
              {"theta_post", v.post_angle},
              {"t_pre", v.prepare_time},
              {"t_sw", v.swing_time},
              {"t_coast", v.coast_time},
              {"t_ext", v.extension_time},
              {"t_ret", v.return_time},
              {"t_k", v.kick_time},
              {"f_g", v.step_frequency},
              {"z_h", v.hip_height},
              {"r_b", v.ball_radius},
              {"segments", std::move(segments)}};
  return doc.dump(2) + "\n";
}

KickPlan PlanFromJson(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) BadPlan("not a JSON object");
  if (doc.value("format", "") != "kickplan") BadPlan("missing format tag");
  auto number = [&doc](const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_number()) {
      BadPlan(std::string("missing number '") + key + "'");
    }
    return it->get<double>();
  };

  PlanValues v;
  auto branch = ParseBranch(doc.value("branch", ""));
  if (!branch) BadPlan("unknown branch");
  v.branch = *branch;
  v.kick_acceleration = number("alpha_k");
  v.swing_acceleration = number("alpha_swing");
  v.kick_velocity = number("omega_k");
  v.kick_angle = number("theta_k");
  v.swing_angle = number("theta_sw");
  v.pre_swing_angle = number("theta_pre");
  v.return_angle = number("theta_ret");
  v.post_angle = number("theta_post");
  v.prepare_time = number("t_pre");
  v.swing_time = number("t_sw");
  v.coast_time = number("t_coast");
  v.extension_time = number("t_ext");
  v.return_time = number("t_ret");
  v.kick_time = number("t_k");
  v.step_frequency = number("f_g");
  v.hip_height = number("z_h");
  v.ball_radius = number("r_b");

  auto it = doc.find("segments");
  if (it == doc.end() || !it->is_array()) BadPlan("missing segments");
  std::vector<PhaseSegment> segments;
  for (const json& item : *it) {
    if (!item.is_object()) BadPlan("segment is not an object");
    auto field = [&item](const char* key) {
      auto f = item.find(key);
      if (f == item.end() || !f->is_number()) {
        BadPlan(std::string("segment missing '") + key + "'");
      }
      return f->get<double>();
    };
    auto phase = ParsePhase(item.value("phase", ""));
    if (!phase) BadPlan("unknown phase");
    segments.push_back({.phase = *phase,
                        .t_start = field("t_start"),
                        .duration = field("duration"),
                        .theta_start = field("theta_start"),
                        .omega_start = field("omega_start"),
                        .alpha = field("alpha")});
  }
  return KickPlan(v, std::move(segments));
}

std::string FormatPlanSummary(const KickPlan& plan) {
  const PlanValues& v = plan.values();
  std::ostringstream out;
  out << Key("branch") << SwingBranchName(v.branch) << '\n';
  const Line lines[] = {
      {"alpha_k", v.kick_acceleration, "rad/s^2"},
      {"omega_k", v.kick_velocity, "rad/s"},
      {"theta_k", v.kick_angle, "rad"},
      {"theta_pre", v.pre_swing_angle, "rad"},
      {"theta_sw", v.swing_angle, "rad"},
      {"theta_ret", v.return_angle, "rad"},
      {"theta_post", v.post_angle, "rad"},
      {"t_pre", v.prepare_time, "s"},
      {"t_sw", v.swing_time, "s"},
      {"t_coast", v.coast_time, "s"},
      {"t_ext", v.extension_time, "s"},
      {"t_ret", v.return_time, "s"},
      {"t_k", v.kick_time, "s"},
      {"f_g", v.step_frequency, "Hz"},
  };
  AppendLines(out, lines);
  return out.str();
}

std::string FormatReport(const PlanReport& r) {
  std::ostringstream out;
  out << Key("status") << (r.passed() ? "pass" : "fail") << '\n';
  const Line lines[] = {
      {"start.time", r.start.time, "s", true},
      {"start.theta", r.start.theta, "rad", true},
      {"start.omega", r.start.omega, "rad/s", true},
      {"end.time", r.end.time, "s", true},
      {"end.theta", r.end.theta, "rad", true},
      {"end.omega", r.end.omega, "rad/s", true},
      {"max_velocity", r.max_velocity, "rad/s"},
      {"max_accel", r.max_acceleration, "rad/s^2"},
      {"freq_residual", r.frequency_residual, "", true},
  };
  AppendLines(out, lines);
  for (const ContinuityResidual& c : r.continuity) {
    const std::string prefix = "boundary." + std::to_string(c.index);
    const Line boundary[] = {{prefix + ".dt", c.time_gap, "s", true},
                             {prefix + ".theta", c.theta, "rad", true},
                             {prefix + ".omega", c.omega, "rad/s", true}};
    AppendLines(out, boundary);
  }
  for (const LimitViolation& l : r.limit_violations) {
    out << Key("violation") << LimitName(l.kind) << " by "
        << FormatFixed(l.excess, kSummaryDecimals) << '\n';
  }
  return out.str();
}

std::string FormatLaunchEstimate(const LaunchEstimate& e) {
  std::ostringstream out;
  const Line lines[] = {{"v_foot", e.foot_speed, "m/s"},
                        {"impulse", e.impulse, "kg*m/s"},
                        {"v_ball", e.ball_speed, "m/s"},
                        {"range", e.range, "m"}};
  AppendLines(out, lines);
  return out.str();
}

}  // namespace kick
