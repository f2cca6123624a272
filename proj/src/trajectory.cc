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

#include "kick/trajectory.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "kick/simd/kinematics.h"

namespace kick {
namespace {

constexpr double kBoundaryMergeTolerance = 1e-9;

void RequireInPlan(const KickPlan& plan, double t) {
  if (!(t >= 0.0 && t <= plan.duration())) {
    throw InvalidParamError(
        "t", "time " + std::to_string(t) + " outside kick [0, t_k]");
  }
}

// Linear scan; plans have at most eight segments.
std::size_t SegmentIndexAt(std::span<const PhaseSegment> segments, double t,
                           std::size_t from = 0) {
  std::size_t index = from;
  while (index + 1 < segments.size() && t >= segments[index + 1].t_start) {
    ++index;
  }
  return index;
}

TrajectorySample Finish(const KickPlan& plan, const PhaseSegment& segment,
                        double t, double theta, double omega) {
  TrajectorySample sample;
  sample.t = t;
  sample.theta = theta;
  sample.omega = omega;
  sample.alpha = segment.alpha;
  sample.phase = segment.phase;
  const FootOffset foot =
      FootOffsets(theta, plan.values().hip_height, plan.values().ball_radius);
  sample.x_offset = foot.x;
  sample.z_offset = foot.z;
  return sample;
}

}  // namespace

FootOffset FootOffsets(double theta, double hip_height, double ball_radius) {
  const double radius = hip_height - ball_radius;
  return {.x = radius * std::sin(theta), .z = radius * (1.0 - std::cos(theta))};
}

TrajectorySample Evaluate(const KickPlan& plan, double t) {
  RequireInPlan(plan, t);
  const auto segments = plan.segments();
  if (segments.empty()) {
    TrajectorySample rest;
    rest.t = t;
    return rest;
  }
  const PhaseSegment& segment = segments[SegmentIndexAt(segments, t)];
  const double tau = t - segment.t_start;
  return Finish(plan, segment, t, segment.AngleAt(tau),
                segment.VelocityAt(tau));
}

std::vector<TrajectorySample> EvaluateBatch(const KickPlan& plan,
                                            std::span<const double> times) {
  const auto segments = plan.segments();
  const std::size_t n = times.size();
  std::vector<TrajectorySample> samples(n);
  if (n == 0) return samples;
  if (segments.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RequireInPlan(plan, times[i]);
      samples[i].t = times[i];
    }
    return samples;
  }

  std::vector<double> tau(n), theta0(n), omega0(n), alpha(n), theta(n),
      omega(n);
  std::vector<std::size_t> owner(n);
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    RequireInPlan(plan, times[i]);
    if (i > 0 && times[i] < times[i - 1]) {
      throw InvalidParamError("t", "batch times must be ascending");
    }
    index = SegmentIndexAt(segments, times[i], index);
    const PhaseSegment& s = segments[index];
    owner[i] = index;
    tau[i] = times[i] - s.t_start;
    theta0[i] = s.theta_start;
    omega0[i] = s.omega_start;
    alpha[i] = s.alpha;
  }
  simd::EvaluateKinematics({tau, theta0, omega0, alpha}, {theta, omega});
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = Finish(plan, segments[owner[i]], times[i], theta[i], omega[i]);
  }
  return samples;
}

std::vector<double> SampleTimes(const KickPlan& plan, double dt) {
  if (!(dt > 0) || !std::isfinite(dt)) {
    throw InvalidParamError("dt", "dt must be positive");
  }
  const double end = plan.duration();
  std::vector<double> boundaries;
  for (const PhaseSegment& s : plan.segments()) {
    if (s.t_start > 0.0 && s.t_start < end) boundaries.push_back(s.t_start);
  }
  boundaries.push_back(end);
  std::sort(boundaries.begin(), boundaries.end());

  std::vector<double> times{0.0};
  std::size_t next_boundary = 0;
  auto push = [&times](double t) {
    if (t - times.back() > kBoundaryMergeTolerance) {
      times.push_back(t);
    } else if (t > times.back() && times.size() > 1) {
      // Boundaries win over nearby grid points.
      times.back() = t;
    }
  };
  for (std::size_t k = 1;; ++k) {
    const double grid = static_cast<double>(k) * dt;
    while (next_boundary < boundaries.size() &&
           boundaries[next_boundary] <= grid + kBoundaryMergeTolerance) {
      push(boundaries[next_boundary++]);
    }
    if (grid >= end) break;
    if (grid - times.back() > kBoundaryMergeTolerance) times.push_back(grid);
  }
  while (next_boundary < boundaries.size()) push(boundaries[next_boundary++]);
  return times;
}

std::vector<TrajectorySample> SampleTrajectory(const KickPlan& plan, double dt,
                                               const SampleObserver& observer) {
  std::vector<TrajectorySample> samples =
      EvaluateBatch(plan, SampleTimes(plan, dt));
  if (observer) {
    for (const TrajectorySample& s : samples) observer(s);
  }
  return samples;
}

}  // namespace kick
