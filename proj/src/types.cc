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

#include "kick/types.h"

#include <array>
#include <cmath>
#include <utility>

namespace kick {
namespace {

constexpr std::array<std::string_view, 4> kPhaseNames = {"prepare", "swing",
                                                         "continue", "return"};

void Require(bool ok, const char* field, const char* message) {
  if (!ok) throw InvalidParamError(field, message);
}

bool Finite(double v) { return std::isfinite(v); }

}  // namespace

std::string_view PhaseName(Phase phase) {
  return kPhaseNames[static_cast<std::size_t>(phase)];
}

std::optional<Phase> ParsePhase(std::string_view name) {
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i) {
    if (kPhaseNames[i] == name) return static_cast<Phase>(i);
  }
  return std::nullopt;
}

std::string_view SwingBranchName(SwingBranch branch) {
  switch (branch) {
    case SwingBranch::kSwingUp:
      return "swing_up";
    case SwingBranch::kCoast:
      return "coast";
    case SwingBranch::kReducedAcceleration:
      return "reduced_acceleration";
  }
  return "unknown";
}

const KickParams& ValidateParams(const KickParams& p) {
  Require(Finite(p.ball_radius) && p.ball_radius > 0, "r_b",
          "r_b must be positive");
  Require(Finite(p.hip_height) && p.hip_height > p.ball_radius, "z_h",
          "z_h must exceed r_b");
  Require(Finite(p.ball_distance) && p.ball_distance > p.ball_radius, "x_b",
          "x_b must exceed r_b");
  Require(Finite(p.hip_torque) && p.hip_torque > 0, "tau_h",
          "tau_h must be positive");
  Require(Finite(p.hip_velocity_max) && p.hip_velocity_max > 0, "omega_h_max",
          "omega_h_max must be positive");
  if (p.kick_velocity) {
    Require(Finite(*p.kick_velocity) && *p.kick_velocity > 0, "omega_k_req",
            "omega_k_req must be positive when given");
  }
  Require(Finite(p.extension_angle) && p.extension_angle >= 0, "theta_ext",
          "theta_ext must be non-negative");
  Require(Finite(p.swing_angle_min) && p.swing_angle_min < 0, "theta_min",
          "theta_min must be negative");
  Require(Finite(p.swing_angle_max) && p.swing_angle_max > 0, "theta_max",
          "theta_max must be positive");
  Require(Finite(p.nominal_step_frequency) && p.nominal_step_frequency > 0,
          "f_nominal", "f_nominal must be positive");
  return p;
}

const LegMassModel& ValidateLegModel(const LegMassModel& model) {
  Require(!model.masses.empty(), "leg_mass", "leg model has no masses");
  bool any_lever = false;
  for (const PointMass& m : model.masses) {
    Require(Finite(m.mass) && m.mass > 0, "leg_mass",
            "leg mass must be positive");
    Require(Finite(m.distance) && m.distance >= 0, "leg_mass",
            "leg mass distance must be non-negative");
    any_lever = any_lever || m.distance > 0;
  }
  Require(any_lever, "leg_mass",
          "at least one leg mass must be away from the hip pivot");
  return model;
}

KickPlan::KickPlan(const PlanValues& values, std::vector<PhaseSegment> segments)
    : values_(values), segments_(std::move(segments)) {
  const std::pair<double, const char*> durations[] = {
      {values_.prepare_time, "t_pre"}, {values_.swing_time, "t_sw"},
      {values_.coast_time, "t_coast"}, {values_.extension_time, "t_ext"},
      {values_.return_time, "t_ret"},  {values_.kick_time, "t_k"}};
  for (const auto& [value, name] : durations) {
    Require(!(value < 0), name, "plan durations must be non-negative");
  }
  for (const PhaseSegment& s : segments_) {
    Require(!(s.duration < 0), "segment.duration",
            "segment durations must be non-negative");
  }
}

}  // namespace kick
