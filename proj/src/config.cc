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

#include "kick/config.h"

#include <charconv>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

namespace kick {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

constexpr std::pair<std::string_view, std::string_view> kFieldToKey[] = {
    {"r_b", "ball_radius"},
    {"x_b", "ball_distance"},
    {"z_h", "hip_height"},
    {"tau_h", "hip_torque"},
    {"omega_h_max", "hip_velocity_max_deg_s"},
    {"omega_k_req", "kick_velocity_deg_s"},
    {"theta_ext", "extension_angle_deg"},
    {"theta_min", "swing_angle_min_deg"},
    {"theta_max", "swing_angle_max_deg"},
    {"f_nominal", "nominal_step_frequency"},
    {"launch_angle", "launch_angle_deg"},
};

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void Fail(std::string_view key, int line,
                       const std::string& what) {
  std::ostringstream msg;
  if (line > 0) msg << "line " << line << ": ";
  msg << key << ": " << what;
  throw ConfigError(std::string(key), msg.str());
}

std::optional<double> ToDouble(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

struct Entry {
  std::string value;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::string_view view = raw;
      if (auto hash = view.find('#'); hash != std::string_view::npos) {
        view = view.substr(0, hash);
      }
      view = Trim(view);
      if (view.empty()) continue;
      const auto eq = view.find('=');
      if (eq == std::string_view::npos) {
        Fail("syntax", line, "expected 'key = value'");
      }
      const std::string key(Trim(view.substr(0, eq)));
      const std::string value(Trim(view.substr(eq + 1)));
      if (key.empty()) Fail("syntax", line, "missing key");
      if (key == "leg_mass") {
        leg_masses_.push_back({value, line});
        continue;
      }
      if (!entries_.emplace(key, Entry{value, line}).second) {
        Fail(key, line, "duplicate key");
      }
    }
  }

  double Number(const std::string& key) {
    auto value = OptionalNumber(key);
    if (!value) Fail(key, 0, "missing required key");
    return *value;
  }

  std::optional<double> OptionalNumber(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.push_back(key);
    auto value = ToDouble(it->second.value);
    if (!value) Fail(key, it->second.line, "not a number: " + it->second.value);
    return value;
  }

  std::optional<std::string> OptionalText(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.push_back(key);
    return it->second.value;
  }

  const std::vector<Entry>& leg_masses() const { return leg_masses_; }

  void RejectUnknown() const {
    for (const auto& [key, entry] : entries_) {
      bool known = false;
      for (const std::string& used : used_) known = known || used == key;
      if (!known) Fail(key, entry.line, "unknown key");
    }
  }

 private:
  std::map<std::string, Entry> entries_;
  std::vector<Entry> leg_masses_;
  std::vector<std::string> used_;
};

PointMass ParseLegMass(const Entry& entry) {
  std::istringstream in(entry.value);
  std::string mass_text, distance_text, extra;
  in >> mass_text >> distance_text;
  if (in >> extra || mass_text.empty() || distance_text.empty()) {
    Fail("leg_mass", entry.line, "expected '<kg> <m>'");
  }
  auto mass = ToDouble(mass_text);
  auto distance = ToDouble(distance_text);
  if (!mass || !distance) {
    Fail("leg_mass", entry.line, "not a number: " + entry.value);
  }
  return {.mass = *mass, .distance = *distance};
}

}  // namespace

std::string_view ConfigKeyForField(std::string_view field) {
  for (const auto& [name, key] : kFieldToKey) {
    if (name == field) return key;
  }
  return field;
}

KickConfig ParseConfig(std::string_view text) {
  Reader reader(text);
  const double version = reader.Number("schema_version");
  if (version != kConfigSchemaVersion) {
    Fail("schema_version", 0,
         "unsupported schema version (expected " +
             std::to_string(kConfigSchemaVersion) + ")");
  }

  KickConfig config;
  KickParams& p = config.params;
  p.ball_radius = reader.Number("ball_radius");
  p.ball_distance = reader.Number("ball_distance");
  p.hip_height = reader.Number("hip_height");
  p.hip_torque = reader.Number("hip_torque");
  p.hip_velocity_max = reader.Number("hip_velocity_max_deg_s") * kDegToRad;
  if (auto v = reader.OptionalNumber("kick_velocity_deg_s")) {
    p.kick_velocity = *v * kDegToRad;
  }
  p.extension_angle = reader.Number("extension_angle_deg") * kDegToRad;
  p.swing_angle_min = reader.Number("swing_angle_min_deg") * kDegToRad;
  p.swing_angle_max = reader.Number("swing_angle_max_deg") * kDegToRad;
  p.nominal_step_frequency = reader.Number("nominal_step_frequency");

  if (auto mode = reader.OptionalText("swing_mode")) {
    if (*mode == "coast") {
      config.planner.swing_mode = SwingMode::kCoast;
    } else if (*mode == "reduced_acceleration") {
      config.planner.swing_mode = SwingMode::kReducedAcceleration;
    } else {
      Fail("swing_mode", 0, "expected 'coast' or 'reduced_acceleration'");
    }
  }
  if (auto mode = reader.OptionalText("return_velocity_limit")) {
    if (*mode == "reject") {
      config.planner.return_limit = ReturnLimit::kReject;
    } else if (*mode == "cruise") {
      config.planner.return_limit = ReturnLimit::kCruise;
    } else {
      Fail("return_velocity_limit", 0, "expected 'reject' or 'cruise'");
    }
  }

  if (auto v = reader.OptionalNumber("ball_mass")) config.impact.ball_mass = *v;
  if (auto v = reader.OptionalNumber("foot_effective_mass")) {
    config.impact.effective_foot_mass = *v;
  }
  if (auto v = reader.OptionalNumber("restitution")) {
    config.impact.restitution = *v;
  }
  if (auto v = reader.OptionalNumber("launch_angle_deg")) {
    config.impact.launch_angle = *v * kDegToRad;
  }

  for (const Entry& entry : reader.leg_masses()) {
    config.leg.masses.push_back(ParseLegMass(entry));
  }
  reader.RejectUnknown();

  try {
    ValidateParams(config.params);
    ValidateLegModel(config.leg);
  } catch (const InvalidParamError& e) {
    const std::string key(ConfigKeyForField(e.field()));
    throw ConfigError(key, key + ": " + e.what());
  }
  const ImpactModel& impact = config.impact;
  if (!(impact.ball_mass > 0)) Fail("ball_mass", 0, "must be positive");
  if (!(impact.effective_foot_mass > 0)) {
    Fail("foot_effective_mass", 0, "must be positive");
  }
  if (!(impact.restitution >= 0 && impact.restitution <= 1)) {
    Fail("restitution", 0, "must lie in [0, 1]");
  }
  if (!(impact.launch_angle >= 0 &&
        impact.launch_angle < std::numbers::pi / 2)) {
    Fail("launch_angle_deg", 0, "must lie in [0, 90)");
  }
  return config;
}

KickConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config", "cannot read config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

}  // namespace kick
