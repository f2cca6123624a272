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

// Compiled with -mavx2 only; callers must check IsaSupported(Isa::kAvx2).

#include <immintrin.h>

#include "kick/simd/kinematics.h"

namespace kick::simd::internal {

void KinematicsAvx2(const double* tau, const double* theta0,
                    const double* omega0, const double* alpha, double* theta,
                    double* omega, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(tau + i);
    const __m256d th0 = _mm256_loadu_pd(theta0 + i);
    const __m256d w0 = _mm256_loadu_pd(omega0 + i);
    const __m256d a = _mm256_loadu_pd(alpha + i);

    const __m256d linear = _mm256_mul_pd(w0, t);
    const __m256d quadratic =
        _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(half, a), t), t);
    _mm256_storeu_pd(theta + i,
                     _mm256_add_pd(_mm256_add_pd(th0, linear), quadratic));
    _mm256_storeu_pd(omega + i, _mm256_add_pd(w0, _mm256_mul_pd(a, t)));
  }
  if (i < n) {
    KinematicsScalar(tau + i, theta0 + i, omega0 + i, alpha + i, theta + i,
                     omega + i, n - i);
  }
}

}  // namespace kick::simd::internal
