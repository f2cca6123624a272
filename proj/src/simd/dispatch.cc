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

#include <stdexcept>

#include "kick/simd/kinematics.h"

namespace kick::simd {
namespace {

bool CpuHasAvx2() {
#if defined(KICK_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

internal::KernelFn KernelFor(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &internal::KinematicsScalar;
    case Isa::kAvx2:
#if defined(KICK_HAVE_AVX2_KERNEL)
      return &internal::KinematicsAvx2;
#else
      return nullptr;
#endif
    case Isa::kNeon:
#if defined(KICK_HAVE_NEON_KERNEL)
      return &internal::KinematicsNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool IsaSupported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return CpuHasAvx2();
    case Isa::kNeon:
      // Advanced SIMD is mandatory on AArch64.
      return KernelFor(Isa::kNeon) != nullptr;
  }
  return false;
}

Isa BestSupportedIsa() {
  static const Isa best = [] {
    if (IsaSupported(Isa::kAvx2)) return Isa::kAvx2;
    if (IsaSupported(Isa::kNeon)) return Isa::kNeon;
    return Isa::kScalar;
  }();
  return best;
}

void EvaluateKinematics(Isa isa, const KinematicsInput& in,
                        const KinematicsOutput& out) {
  const std::size_t n = in.tau.size();
  if (in.theta0.size() != n || in.omega0.size() != n || in.alpha.size() != n ||
      out.theta.size() != n || out.omega.size() != n) {
    throw std::invalid_argument("kinematics batch spans differ in length");
  }
  if (!IsaSupported(isa)) {
    throw std::invalid_argument("kinematics variant not supported on this CPU");
  }
  KernelFor(isa)(in.tau.data(), in.theta0.data(), in.omega0.data(),
                 in.alpha.data(), out.theta.data(), out.omega.data(), n);
}

}  // namespace kick::simd
