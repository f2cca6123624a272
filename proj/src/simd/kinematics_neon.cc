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

// AArch64 only. vmulq/vaddq are used instead of vfmaq so results match the
// scalar reference exactly.

#include <arm_neon.h>

#include "kick/simd/kinematics.h"

namespace kick::simd::internal {

void KinematicsNeon(const double* tau, const double* theta0,
                    const double* omega0, const double* alpha, double* theta,
                    double* omega, std::size_t n) {
  const float64x2_t half = vdupq_n_f64(0.5);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t t = vld1q_f64(tau + i);
    const float64x2_t th0 = vld1q_f64(theta0 + i);
    const float64x2_t w0 = vld1q_f64(omega0 + i);
    const float64x2_t a = vld1q_f64(alpha + i);

    const float64x2_t linear = vmulq_f64(w0, t);
    const float64x2_t quadratic =
        vmulq_f64(vmulq_f64(vmulq_f64(half, a), t), t);
    vst1q_f64(theta + i, vaddq_f64(vaddq_f64(th0, linear), quadratic));
    vst1q_f64(omega + i, vaddq_f64(w0, vmulq_f64(a, t)));
  }
  if (i < n) {
    KinematicsScalar(tau + i, theta0 + i, omega0 + i, alpha + i, theta + i,
                     omega + i, n - i);
  }
}

}  // namespace kick::simd::internal
