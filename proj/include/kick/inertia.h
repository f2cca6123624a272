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

#ifndef KICK_INERTIA_H_
#define KICK_INERTIA_H_

#include "kick/types.h"

namespace kick {

// Moment of inertia of the leg about the hip pivot, sum of m_i * d_i^2.
// The model is assumed valid (see ValidateLegModel).
double LegInertia(const LegMassModel& model);

// Torque-limited angular acceleration of the leg, tau_h / I_l.
// Throws InvalidParamError for non-positive inputs.
double MaxKickAcceleration(double hip_torque, double leg_inertia);

}  // namespace kick

#endif  // KICK_INERTIA_H_
