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

#include "kick/inertia.h"

#include <cmath>

namespace kick {

double LegInertia(const LegMassModel& model) {
  double inertia = 0.0;
  for (const PointMass& m : model.masses) {
    inertia += m.mass * m.distance * m.distance;
  }
  return inertia;
}

double MaxKickAcceleration(double hip_torque, double leg_inertia) {
  if (!(hip_torque > 0) || !std::isfinite(hip_torque)) {
    throw InvalidParamError("tau_h", "tau_h must be positive");
  }
  if (!(leg_inertia > 0) || !std::isfinite(leg_inertia)) {
    throw InvalidParamError("I_l", "leg inertia must be positive");
  }
  return hip_torque / leg_inertia;
}

}  // namespace kick
