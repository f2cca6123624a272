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

#ifndef KICK_PLANNER_H_
#define KICK_PLANNER_H_

#include <limits>
#include <optional>
#include <vector>

#include "kick/types.h"

namespace kick {

// Swing angle at which the foot tip meets the ball center,
// atan2(z_h - r_b, x_b - r_b). Result lies in (0, pi/2).
double TargetKickAngle(double hip_height, double ball_radius,
                       double ball_distance);

struct SwingProfile {
  double time = 0.0;   // omega_k / alpha_k
  double angle = 0.0;  // 0.5 * alpha_k * time^2
};

SwingProfile ComputeSwingProfile(double kick_velocity, double acceleration);

// Wind-up from rest at zero to rest at `pre_swing_angle` as a symmetric
// accelerate/decelerate pair. Empty when the angle is zero.
struct PreparePhase {
  double time = 0.0;
  std::vector<PhaseSegment> segments;
};

PreparePhase ComputePreparePhase(double pre_swing_angle, double acceleration,
                                 double t_start = 0.0);

// Constant-velocity follow-through after impact. No segment is emitted for a
// zero extension angle.
struct ContinuePhase {
  double return_angle = 0.0;
  double time = 0.0;
  std::vector<PhaseSegment> segments;
};

ContinuePhase ComputeContinuePhase(double kick_angle, double extension_angle,
                                   double kick_velocity, double t_start = 0.0);

// Deceleration to the peak `post_angle` followed by a bang-bang return to
// rest at zero. If the way back would pass `velocity_max` it cruises at that
// speed instead, which lengthens the phase.
struct ReturnPhase {
  double post_angle = 0.0;
  double time = 0.0;
  std::vector<PhaseSegment> segments;
};

ReturnPhase ComputeReturnPhase(
    double return_angle, double swing_angle, double kick_velocity,
    double acceleration, double t_start = 0.0,
    double velocity_max = std::numeric_limits<double>::infinity());

// Fastest kick velocity allowed by, in order: the request (or the hip limit
// when none is given), the hip velocity limit, and the front joint limit on
// the overshoot angle. Throws InfeasibleKickError when the joint limit does
// not clear the kick angle plus extension.
double ClampKickVelocity(double kick_angle, double extension_angle,
                         double acceleration, double angle_max,
                         double velocity_max,
                         std::optional<double> requested = std::nullopt);

// What to do when the bang-bang way back after the overshoot would pass the
// hip velocity limit.
enum class ReturnLimit {
  // Keep the pure bang-bang return and report the kick as infeasible.
  kReject,
  // Cruise at omega_h_max between the ramps. Always feasible, but the return
  // then takes longer than the bang-bang time.
  kCruise,
};

struct PlannerOptions {
  SwingMode swing_mode = SwingMode::kCoast;
  ReturnLimit return_limit = ReturnLimit::kReject;
};

// Solves every phase and assembles the segment list. Throws
// InvalidParamError for invalid inputs and InfeasibleKickError when the kick
// does not fit the joint or velocity limits.
KickPlan PlanKick(const KickParams& params, const LegMassModel& leg,
                  const PlannerOptions& options = {});

struct StepSchedule {
  double kick_step_frequency = 0.0;  // 1 / t_k
  double following_step_frequency = 0.0;
};

StepSchedule ScheduleStepFrequency(const KickPlan& plan,
                                   double nominal_frequency);

}  // namespace kick

#endif  // KICK_PLANNER_H_
