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

#ifndef KICK_VERIFY_H_
#define KICK_VERIFY_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "kick/types.h"

namespace kick {

// Tolerance for boundary and continuity residuals, rad and rad/s.
inline constexpr double kContinuityTolerance = 1e-9;

// Default oracle step and the closed-form agreement it is expected to reach.
inline constexpr double kOracleStep = 1e-5;
inline constexpr double kOracleTolerance = 1e-4;

struct NumericState {
  double t = 0.0;
  double theta = 0.0;
  double omega = 0.0;
};

// Semi-implicit Euler integration of the plan's piecewise-constant
// acceleration, starting from rest at zero. Each segment is stepped with dt
// and its last substep is shortened to land on the segment end. The first
// entry is the initial state at t = 0.
std::vector<NumericState> IntegrateNumeric(const KickPlan& plan, double dt);

// Largest |theta_numeric - theta_closed_form| over the oracle's states.
double OracleDeviation(const KickPlan& plan, double dt);

struct StateResidual {
  double time = 0.0;
  double theta = 0.0;
  double omega = 0.0;
};

// Mismatch between the end of segment `index - 1` and the start of `index`.
struct ContinuityResidual {
  std::size_t index = 0;
  double time_gap = 0.0;
  double theta = 0.0;
  double omega = 0.0;
};

enum class LimitKind { kAngleMin, kAngleMax, kVelocityMax };

std::string_view LimitName(LimitKind kind);

struct LimitViolation {
  LimitKind kind = LimitKind::kAngleMax;
  double excess = 0.0;  // positive amount beyond the limit
};

struct PlanReport {
  StateResidual start;  // |t|, |theta|, |omega| at the first segment start
  StateResidual end;    // |t - t_k|, |theta|, |omega| at the last segment end
  double max_velocity = 0.0;
  double max_acceleration = 0.0;
  double frequency_residual = 0.0;  // |f_g * t_k - 1|
  std::vector<LimitViolation> limit_violations;
  std::vector<ContinuityResidual> continuity;

  bool passed() const;
};

PlanReport CheckPlan(const KickPlan& plan, const KickParams& params);

// Drag-free impact stand-in used only to compare kicks with each other.
struct ImpactModel {
  double ball_mass = 0.45;           // kg
  double effective_foot_mass = 2.0;  // kg
  double restitution = 0.6;          // [0, 1]
  double launch_angle = 0.35;        // rad above horizontal
};

struct LaunchEstimate {
  double foot_speed = 0.0;  // m/s
  double impulse = 0.0;     // kg*m/s
  double ball_speed = 0.0;  // m/s
  double range = 0.0;       // m
};

inline constexpr double kGravity = 9.81;

LaunchEstimate EstimateBallLaunch(double kick_velocity, double hip_height,
                                  double ball_radius,
                                  const ImpactModel& impact);

}  // namespace kick

#endif  // KICK_VERIFY_H_
