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

#include "kick/planner.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kick/inertia.h"

namespace kick {
namespace {

void RequirePositive(double value, const char* field) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw InvalidParamError(field, std::string(field) + " must be positive");
  }
}

constexpr double kUnlimited = std::numeric_limits<double>::infinity();

// Rest-to-rest bang-bang move from `from` to `to` at magnitude `acceleration`.
// Both halves take sqrt(|to - from| / acceleration). When that peak would pass
// `speed_limit`, a cruise at the limit is inserted between the two ramps.
double AppendRestToRest(Phase phase, double from, double to,
                        double acceleration, double t_start,
                        std::vector<PhaseSegment>& out,
                        double speed_limit = kUnlimited) {
  const double distance = to - from;
  if (distance == 0.0) return 0.0;
  const double magnitude = std::fabs(distance);
  const double sign = distance > 0 ? 1.0 : -1.0;
  const double signed_accel = sign * acceleration;
  if (std::sqrt(magnitude * acceleration) <= speed_limit) {
    const double half_time = std::sqrt(std::fabs(distance / acceleration));
    out.push_back({.phase = phase,
                   .t_start = t_start,
                   .duration = half_time,
                   .theta_start = from,
                   .omega_start = 0.0,
                   .alpha = signed_accel});
    out.push_back({.phase = phase,
                   .t_start = t_start + half_time,
                   .duration = half_time,
                   .theta_start = from + 0.5 * distance,
                   .omega_start = signed_accel * half_time,
                   .alpha = -signed_accel});
    return 2.0 * half_time;
  }
  const double ramp_time = speed_limit / acceleration;
  const double ramp_angle = 0.5 * speed_limit * ramp_time;
  const double cruise_time = (magnitude - 2.0 * ramp_angle) / speed_limit;
  out.push_back({.phase = phase,
                 .t_start = t_start,
                 .duration = ramp_time,
                 .theta_start = from,
                 .omega_start = 0.0,
                 .alpha = signed_accel});
  out.push_back({.phase = phase,
                 .t_start = t_start + ramp_time,
                 .duration = cruise_time,
                 .theta_start = from + sign * ramp_angle,
                 .omega_start = sign * speed_limit,
                 .alpha = 0.0});
  out.push_back({.phase = phase,
                 .t_start = t_start + ramp_time + cruise_time,
                 .duration = ramp_time,
                 .theta_start = to - sign * ramp_angle,
                 .omega_start = sign * speed_limit,
                 .alpha = -signed_accel});
  return 2.0 * ramp_time + cruise_time;
}

// Return phase where the deceleration after the follow-through mirrors the
// swing (at `swing_acceleration`) and the way back uses `back_acceleration`.
ReturnPhase BuildReturnPhase(double return_angle, const SwingProfile& swing,
                             double kick_velocity, double swing_acceleration,
                             double back_acceleration, double t_start,
                             double velocity_max) {
  ReturnPhase result;
  result.post_angle = return_angle + swing.angle;
  if (swing.time > 0) {
    result.segments.push_back({.phase = Phase::kReturn,
                               .t_start = t_start,
                               .duration = swing.time,
                               .theta_start = return_angle,
                               .omega_start = kick_velocity,
                               .alpha = -swing_acceleration});
  }
  const double back_time = AppendRestToRest(
      Phase::kReturn, result.post_angle, 0.0, back_acceleration,
      t_start + swing.time, result.segments, velocity_max);
  result.time = swing.time + back_time;
  return result;
}

}  // namespace

double TargetKickAngle(double hip_height, double ball_radius,
                       double ball_distance) {
  if (!(hip_height > ball_radius)) {
    throw InvalidParamError("z_h", "z_h must exceed r_b");
  }
  if (!(ball_distance > ball_radius)) {
    throw InvalidParamError("x_b", "x_b must exceed r_b");
  }
  return std::atan2(hip_height - ball_radius, ball_distance - ball_radius);
}

SwingProfile ComputeSwingProfile(double kick_velocity, double acceleration) {
  RequirePositive(kick_velocity, "omega_k");
  RequirePositive(acceleration, "alpha_k");
  SwingProfile profile;
  profile.time = kick_velocity / acceleration;
  profile.angle = 0.5 * acceleration * profile.time * profile.time;
  return profile;
}

PreparePhase ComputePreparePhase(double pre_swing_angle, double acceleration,
                                 double t_start) {
  RequirePositive(acceleration, "alpha_k");
  PreparePhase result;
  result.time = AppendRestToRest(Phase::kPrepare, 0.0, pre_swing_angle,
                                 acceleration, t_start, result.segments);
  return result;
}

ContinuePhase ComputeContinuePhase(double kick_angle, double extension_angle,
                                   double kick_velocity, double t_start) {
  RequirePositive(kick_velocity, "omega_k");
  if (!(extension_angle >= 0)) {
    throw InvalidParamError("theta_ext", "theta_ext must be non-negative");
  }
  ContinuePhase result;
  result.return_angle = kick_angle + extension_angle;
  result.time = extension_angle / kick_velocity;
  if (result.time > 0) {
    result.segments.push_back({.phase = Phase::kContinue,
                               .t_start = t_start,
                               .duration = result.time,
                               .theta_start = kick_angle,
                               .omega_start = kick_velocity,
                               .alpha = 0.0});
  }
  return result;
}

ReturnPhase ComputeReturnPhase(double return_angle, double swing_angle,
                               double kick_velocity, double acceleration,
                               double t_start, double velocity_max) {
  RequirePositive(acceleration, "alpha_k");
  if (!(velocity_max > 0)) {
    throw InvalidParamError("omega_h_max", "omega_h_max must be positive");
  }
  if (!(kick_velocity >= 0) || !(swing_angle >= 0)) {
    throw InvalidParamError("omega_k",
                            "return phase needs a non-negative kick velocity");
  }
  SwingProfile swing{.time = kick_velocity / acceleration,
                     .angle = swing_angle};
  return BuildReturnPhase(return_angle, swing, kick_velocity, acceleration,
                          acceleration, t_start, velocity_max);
}

double ClampKickVelocity(double kick_angle, double extension_angle,
                         double acceleration, double angle_max,
                         double velocity_max, std::optional<double> requested) {
  RequirePositive(acceleration, "alpha_k");
  if (!(velocity_max > 0)) {
    throw InvalidParamError("omega_h_max", "omega_h_max must be positive");
  }
  const double return_angle = kick_angle + extension_angle;
  const double headroom = angle_max - return_angle;
  if (!(headroom > 0)) {
    throw InfeasibleKickError(
        "kick infeasible: joint limit below kick angle (theta_max must exceed "
        "theta_k + theta_ext)");
  }
  double velocity = requested.value_or(velocity_max);
  RequirePositive(velocity, "omega_k_req");
  velocity = std::min(velocity, velocity_max);

  double joint_cap = std::sqrt(2.0 * acceleration * headroom);
  // Step the cap down until the overshoot, computed the way the planner
  // computes it, lands on or inside the limit.
  while (joint_cap > 0 &&
         return_angle + ComputeSwingProfile(joint_cap, acceleration).angle >
             angle_max) {
    joint_cap = std::nextafter(joint_cap, 0.0);
  }
  return std::min(velocity, joint_cap);
}

KickPlan PlanKick(const KickParams& params, const LegMassModel& leg,
                  const PlannerOptions& options) {
  ValidateParams(params);
  ValidateLegModel(leg);

  PlanValues v;
  v.hip_height = params.hip_height;
  v.ball_radius = params.ball_radius;
  v.kick_acceleration = MaxKickAcceleration(params.hip_torque, LegInertia(leg));
  v.kick_angle = TargetKickAngle(params.hip_height, params.ball_radius,
                                 params.ball_distance);
  v.kick_velocity = ClampKickVelocity(
      v.kick_angle, params.extension_angle, v.kick_acceleration,
      params.swing_angle_max, params.hip_velocity_max, params.kick_velocity);

  SwingProfile swing =
      ComputeSwingProfile(v.kick_velocity, v.kick_acceleration);
  v.swing_acceleration = v.kick_acceleration;
  v.pre_swing_angle = v.kick_angle - swing.angle;

  std::vector<PhaseSegment> segments;
  if (v.pre_swing_angle < 0) {
    if (v.pre_swing_angle < params.swing_angle_min) {
      throw InfeasibleKickError(
          "prepare swing-up exceeds rear joint limit (theta_pre below "
          "theta_min)");
    }
    v.branch = SwingBranch::kSwingUp;
    PreparePhase prepare =
        ComputePreparePhase(v.pre_swing_angle, v.kick_acceleration, 0.0);
    v.prepare_time = prepare.time;
    segments = std::move(prepare.segments);
    segments.push_back({.phase = Phase::kSwing,
                        .t_start = v.prepare_time,
                        .duration = swing.time,
                        .theta_start = v.pre_swing_angle,
                        .omega_start = 0.0,
                        .alpha = v.kick_acceleration});
  } else if (options.swing_mode == SwingMode::kCoast) {
    v.branch = SwingBranch::kCoast;
    v.coast_time = v.pre_swing_angle / v.kick_velocity;
    segments.push_back({.phase = Phase::kSwing,
                        .t_start = 0.0,
                        .duration = swing.time,
                        .theta_start = 0.0,
                        .omega_start = 0.0,
                        .alpha = v.kick_acceleration});
    if (v.coast_time > 0) {
      segments.push_back({.phase = Phase::kSwing,
                          .t_start = swing.time,
                          .duration = v.coast_time,
                          .theta_start = swing.angle,
                          .omega_start = v.kick_velocity,
                          .alpha = 0.0});
    }
  } else {
    v.branch = SwingBranch::kReducedAcceleration;
    v.swing_acceleration =
        v.kick_velocity * v.kick_velocity / (2.0 * v.kick_angle);
    swing = ComputeSwingProfile(v.kick_velocity, v.swing_acceleration);
    v.pre_swing_angle = v.kick_angle - swing.angle;
    segments.push_back({.phase = Phase::kSwing,
                        .t_start = 0.0,
                        .duration = swing.time,
                        .theta_start = 0.0,
                        .omega_start = 0.0,
                        .alpha = v.swing_acceleration});
  }
  v.swing_angle = swing.angle;
  v.swing_time = swing.time;

  const double impact_time = v.prepare_time + v.swing_time + v.coast_time;
  ContinuePhase cont = ComputeContinuePhase(
      v.kick_angle, params.extension_angle, v.kick_velocity, impact_time);
  v.return_angle = cont.return_angle;
  v.extension_time = cont.time;
  segments.insert(segments.end(), cont.segments.begin(), cont.segments.end());

  ReturnPhase ret = BuildReturnPhase(
      v.return_angle, swing, v.kick_velocity, v.swing_acceleration,
      v.kick_acceleration, impact_time + v.extension_time,
      options.return_limit == ReturnLimit::kCruise ? params.hip_velocity_max
                                                   : kUnlimited);
  v.post_angle = ret.post_angle;
  v.return_time = ret.time;
  if (v.post_angle > params.swing_angle_max) {
    throw InfeasibleKickError(
        "kick infeasible: overshoot theta_post exceeds theta_max");
  }
  for (const PhaseSegment& s : ret.segments) {
    if (std::fabs(s.omega_start) > params.hip_velocity_max) {
      throw InfeasibleKickError(
          "kick infeasible: return swing exceeds omega_h_max");
    }
  }
  segments.insert(segments.end(), ret.segments.begin(), ret.segments.end());

  v.kick_time = v.prepare_time + v.swing_time + v.coast_time +
                v.extension_time + v.return_time;
  v.step_frequency = 1.0 / v.kick_time;
  return KickPlan(v, std::move(segments));
}

StepSchedule ScheduleStepFrequency(const KickPlan& plan,
                                   double nominal_frequency) {
  RequirePositive(nominal_frequency, "f_nominal");
  RequirePositive(plan.duration(), "t_k");
  return {.kick_step_frequency = 1.0 / plan.duration(),
          .following_step_frequency = nominal_frequency};
}

}  // namespace kick
