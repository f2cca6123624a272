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

#ifndef KICK_SIMD_KINEMATICS_H_
#define KICK_SIMD_KINEMATICS_H_

#include <cstddef>
#include <span>
#include <string_view>

namespace kick::simd {

// Batch constant-acceleration kinematics over structure-of-arrays input:
//
//   theta[i] = theta0[i] + omega0[i] * tau[i] + 0.5 * alpha[i] * tau[i]^2
//   omega[i] = omega0[i] + alpha[i] * tau[i]
//
// Every variant performs the same IEEE operations in the same order without
// fused multiply-add, so all variants produce bit-identical results to the
// scalar reference.

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

// True when this build contains the variant and the running CPU supports it.
bool IsaSupported(Isa isa);

// Widest supported variant, detected once.
Isa BestSupportedIsa();

struct KinematicsInput {
  std::span<const double> tau;
  std::span<const double> theta0;
  std::span<const double> omega0;
  std::span<const double> alpha;
};

struct KinematicsOutput {
  std::span<double> theta;
  std::span<double> omega;
};

// All spans must have the same length. Throws std::invalid_argument on a
// length mismatch or when `isa` is not supported.
void EvaluateKinematics(Isa isa, const KinematicsInput& in,
                        const KinematicsOutput& out);

inline void EvaluateKinematics(const KinematicsInput& in,
                               const KinematicsOutput& out) {
  EvaluateKinematics(BestSupportedIsa(), in, out);
}

namespace internal {

using KernelFn = void (*)(const double* tau, const double* theta0,
                          const double* omega0, const double* alpha,
                          double* theta, double* omega, std::size_t n);

void KinematicsScalar(const double* tau, const double* theta0,
                      const double* omega0, const double* alpha, double* theta,
                      double* omega, std::size_t n);

#if defined(KICK_HAVE_AVX2_KERNEL)
void KinematicsAvx2(const double* tau, const double* theta0,
                    const double* omega0, const double* alpha, double* theta,
                    double* omega, std::size_t n);
#endif

#if defined(KICK_HAVE_NEON_KERNEL)
void KinematicsNeon(const double* tau, const double* theta0,
                    const double* omega0, const double* alpha, double* theta,
                    double* omega, std::size_t n);
#endif

}  // namespace internal
}  // namespace kick::simd

#endif  // KICK_SIMD_KINEMATICS_H_
