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

#include "kick/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kick {
namespace {

constexpr double kFrequencyTolerance = 1e-12;

struct Extremes {
  double theta_min = 0.0;
  double theta_max = 0.0;
  double speed_max = 0.0;
};

void Include(Extremes& e, double theta, double omega) {
  e.theta_min = std::min(e.theta_min, theta);
  e.theta_max = std::max(e.theta_max, theta);
  e.speed_max = std::max(e.speed_max, std::fabs(omega));
}

// Stored segment start states carry the exact planned values, so extremes
// are taken from those, from interior stationary points, and from the final
// end state.
Extremes ScanExtremes(std::span<const PhaseSegment> segments) {
  Extremes e;
  for (const PhaseSegment& s : segments) {
    Include(e, s.theta_start, s.omega_start);
    if (s.alpha != 0.0) {
      const double stationary = -s.omega_start / s.alpha;
      if (stationary > 0.0 && stationary < s.duration) {
        Include(e, s.AngleAt(stationary), 0.0);
      }
    }
  }
  if (!segments.empty()) {
    Include(e, segments.back().theta_end(), segments.back().omega_end());
  }
  return e;
}

}  // namespace

std::vector<NumericState> IntegrateNumeric(const KickPlan& plan, double dt) {
  if (!(dt > 0) || !std::isfinite(dt)) {
    throw InvalidParamError("dt", "dt must be positive");
  }
  std::vector<NumericState> states;
  NumericState state;
  states.push_back(state);
  for (const PhaseSegment& s : plan.segments()) {
    if (!(s.duration > 0)) continue;
    auto full_steps = static_cast<std::size_t>(std::floor(s.duration / dt));
    double remainder = s.duration - static_cast<double>(full_steps) * dt;
    if (remainder < 0) {
      --full_steps;
      remainder += dt;
    }
    if (remainder <= 1e-12 * dt) remainder = 0.0;
    for (std::size_t k = 1; k <= full_steps; ++k) {
      state.omega += s.alpha * dt;
      state.theta += state.omega * dt;
      state.t = s.t_start + static_cast<double>(k) * dt;
      states.push_back(state);
    }
    if (remainder > 0) {
      state.omega += s.alpha * remainder;
      state.theta += state.omega * remainder;
    }
    state.t = s.t_end();
    if (remainder > 0) {
      states.push_back(state);
    } else {
      states.back().t = state.t;
    }
  }
  return states;
}

double OracleDeviation(const KickPlan& plan, double dt) {
  const std::vector<NumericState> states = IntegrateNumeric(plan, dt);
  const auto segments = plan.segments();
  double worst = 0.0;
  std::size_t index = 0;
  for (const NumericState& state : states) {
    if (segments.empty()) {
      worst = std::max(worst, std::fabs(state.theta));
      continue;
    }
    // A state on a boundary closes the earlier segment; compare against it.
    while (index + 1 < segments.size() && state.t > segments[index].t_end()) {
      ++index;
    }
    const PhaseSegment& s = segments[index];
    const double closed = s.AngleAt(state.t - s.t_start);
    worst = std::max(worst, std::fabs(state.theta - closed));
  }
  return worst;
}

std::string_view LimitName(LimitKind kind) {
  switch (kind) {
    case LimitKind::kAngleMin:
      return "theta_min";
    case LimitKind::kAngleMax:
      return "theta_max";
    case LimitKind::kVelocityMax:
      return "omega_h_max";
  }
  return "unknown";
}

bool PlanReport::passed() const {
  const StateResidual* states[] = {&start, &end};
  for (const StateResidual* r : states) {
    if (!(r->time <= kContinuityTolerance) ||
        !(r->theta <= kContinuityTolerance) ||
        !(r->omega <= kContinuityTolerance)) {
      return false;
    }
  }
  for (const ContinuityResidual& c : continuity) {
    if (!(c.time_gap <= kContinuityTolerance) ||
        !(c.theta <= kContinuityTolerance) ||
        !(c.omega <= kContinuityTolerance)) {
      return false;
    }
  }
  return frequency_residual <= kFrequencyTolerance && limit_violations.empty();
}

PlanReport CheckPlan(const KickPlan& plan, const KickParams& params) {
  PlanReport report;
  const auto segments = plan.segments();
  const PlanValues& v = plan.values();
  report.frequency_residual = std::fabs(v.step_frequency * v.kick_time - 1.0);

  if (segments.empty()) {
    report.end.time = std::fabs(v.kick_time);
    return report;
  }
  const PhaseSegment& first = segments.front();
  report.start = {.time = std::fabs(first.t_start),
                  .theta = std::fabs(first.theta_start),
                  .omega = std::fabs(first.omega_start)};
  const PhaseSegment& last = segments.back();
  report.end = {.time = std::fabs(last.t_end() - v.kick_time),
                .theta = std::fabs(last.theta_end()),
                .omega = std::fabs(last.omega_end())};

  for (std::size_t i = 1; i < segments.size(); ++i) {
    const PhaseSegment& prev = segments[i - 1];
    const PhaseSegment& cur = segments[i];
    report.continuity.push_back(
        {.index = i,
         .time_gap = std::fabs(cur.t_start - prev.t_end()),
         .theta = std::fabs(cur.theta_start - prev.theta_end()),
         .omega = std::fabs(cur.omega_start - prev.omega_end())});
  }

  for (const PhaseSegment& s : segments) {
    report.max_acceleration =
        std::max(report.max_acceleration, std::fabs(s.alpha));
  }
  const Extremes e = ScanExtremes(segments);
  report.max_velocity = e.speed_max;
  if (e.theta_min < params.swing_angle_min) {
    report.limit_violations.push_back(
        {LimitKind::kAngleMin, params.swing_angle_min - e.theta_min});
  }
  if (e.theta_max > params.swing_angle_max) {
    report.limit_violations.push_back(
        {LimitKind::kAngleMax, e.theta_max - params.swing_angle_max});
  }
  if (e.speed_max > params.hip_velocity_max) {
    report.limit_violations.push_back(
        {LimitKind::kVelocityMax, e.speed_max - params.hip_velocity_max});
  }
  return report;
}

LaunchEstimate EstimateBallLaunch(double kick_velocity, double hip_height,
                                  double ball_radius,
                                  const ImpactModel& impact) {
  if (!(kick_velocity >= 0) || !std::isfinite(kick_velocity)) {
    throw InvalidParamError("omega_k", "omega_k must be non-negative");
  }
  if (!(hip_height > ball_radius) || !(ball_radius > 0)) {
    throw InvalidParamError("z_h", "z_h must exceed r_b");
  }
  if (!(impact.ball_mass > 0) || !std::isfinite(impact.ball_mass)) {
    throw InvalidParamError("ball_mass", "ball mass must be positive");
  }
  if (!(impact.effective_foot_mass > 0)) {
    throw InvalidParamError("foot_effective_mass",
                            "effective foot mass must be positive");
  }
  if (!(impact.restitution >= 0 && impact.restitution <= 1)) {
    throw InvalidParamError("restitution", "restitution must lie in [0, 1]");
  }
  if (!(impact.launch_angle >= 0 &&
        impact.launch_angle < std::numbers::pi / 2)) {
    throw InvalidParamError("launch_angle",
                            "launch angle must lie in [0, 90) degrees");
  }

  LaunchEstimate out;
  out.foot_speed = kick_velocity * (hip_height - ball_radius);
  // Collision of a moving foot (effective mass) with a resting ball.
  const double transfer = (1.0 + impact.restitution) *
                          impact.effective_foot_mass /
                          (impact.effective_foot_mass + impact.ball_mass);
  out.ball_speed = transfer * out.foot_speed;
  out.impulse = impact.ball_mass * out.ball_speed;
  if (out.ball_speed > 0) {
    const double vx = out.ball_speed * std::cos(impact.launch_angle);
    const double vz = out.ball_speed * std::sin(impact.launch_angle);
    const double flight =
        (vz + std::sqrt(vz * vz + 2.0 * kGravity * ball_radius)) / kGravity;
    out.range = vx * flight;
  }
  return out;
}

}  // namespace kick
