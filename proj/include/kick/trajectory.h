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

#ifndef KICK_TRAJECTORY_H_
#define KICK_TRAJECTORY_H_

#include <functional>
#include <span>
#include <vector>

#include "kick/types.h"

namespace kick {

struct FootOffset {
  double x = 0.0;  // forward, m
  double z = 0.0;  // up, m
};

// Foot tip on a circle of radius z_h - r_b about the hip:
//   x = (z_h - r_b) sin(theta),  z = (z_h - r_b) (1 - cos(theta)).
FootOffset FootOffsets(double theta, double hip_height, double ball_radius);

// State at time t in [0, t_k]. A time on a segment boundary belongs to the
// later segment; t_k belongs to the last one. Throws InvalidParamError for t
// outside the plan.
TrajectorySample Evaluate(const KickPlan& plan, double t);

// Evaluates a batch of ascending times through the vectorized kinematics
// kernel. Results are bit-identical to calling Evaluate per time.
std::vector<TrajectorySample> EvaluateBatch(const KickPlan& plan,
                                            std::span<const double> times);

// 0, dt, 2dt, ... merged with every segment boundary and t_k. Grid points
// closer than 1e-9 s to a boundary are dropped in favour of the boundary.
std::vector<double> SampleTimes(const KickPlan& plan, double dt);

// Called once per emitted sample, in time order. Lets a consumer attach a
// knee modifier (or anything else) driven by the swing angle.
using SampleObserver = std::function<void(const TrajectorySample&)>;

std::vector<TrajectorySample> SampleTrajectory(
    const KickPlan& plan, double dt, const SampleObserver& observer = {});

}  // namespace kick

#endif  // KICK_TRAJECTORY_H_
