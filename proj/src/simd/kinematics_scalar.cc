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

#include "kick/simd/kinematics.h"

namespace kick::simd::internal {

// Reference variant. The operation order here defines the results every
// other variant must reproduce bit for bit.
void KinematicsScalar(const double* tau, const double* theta0,
                      const double* omega0, const double* alpha, double* theta,
                      double* omega, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = tau[i];
    const double linear = omega0[i] * t;
    const double quadratic = 0.5 * alpha[i] * t * t;
    theta[i] = theta0[i] + linear + quadratic;
    omega[i] = omega0[i] + alpha[i] * t;
  }
}

}  // namespace kick::simd::internal
