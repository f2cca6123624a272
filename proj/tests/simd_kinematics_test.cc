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

#include <gtest/gtest.h>

#include <cstring>
#include <ostream>
#include <random>
#include <vector>

#include "kick/simd/kinematics.h"

namespace kick::simd {

// Readable parameter names in test output.
void PrintTo(Isa isa, std::ostream* os) { *os << IsaName(isa); }

namespace {

struct Batch {
  std::vector<double> tau, theta0, omega0, alpha;
};

Batch RandomBatch(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> time(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> rate(-12.0, 12.0);
  std::uniform_real_distribution<double> accel(-150.0, 150.0);
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    b.tau.push_back(time(rng));
    b.theta0.push_back(angle(rng));
    b.omega0.push_back(rate(rng));
    b.alpha.push_back(accel(rng));
  }
  return b;
}

void RunKernel(Isa isa, const Batch& b, std::vector<double>& theta,
               std::vector<double>& omega) {
  theta.assign(b.tau.size(), -1.0);
  omega.assign(b.tau.size(), -1.0);
  EvaluateKinematics(isa, {b.tau, b.theta0, b.omega0, b.alpha}, {theta, omega});
}

TEST(KinematicsKernelTest, ScalarMatchesFormula) {
  const std::vector<double> tau = {0.0, 0.5, 2.0};
  const std::vector<double> th0 = {1.0, 0.0, -1.0};
  const std::vector<double> w0 = {3.0, 2.0, 0.0};
  const std::vector<double> a = {5.0, -4.0, 1.0};
  std::vector<double> theta(3), omega(3);
  EvaluateKinematics(Isa::kScalar, {tau, th0, w0, a}, {theta, omega});
  EXPECT_EQ(theta[0], 1.0);
  EXPECT_EQ(omega[0], 3.0);
  EXPECT_EQ(theta[1], 0.5);
  EXPECT_EQ(omega[1], 0.0);
  EXPECT_EQ(theta[2], 1.0);
  EXPECT_EQ(omega[2], 2.0);
}

class KinematicsEquivalenceTest : public ::testing::TestWithParam<Isa> {};

TEST_P(KinematicsEquivalenceTest, BitIdenticalToScalarForEveryLength) {
  const Isa isa = GetParam();
  if (!IsaSupported(isa)) {
    GTEST_SKIP() << IsaName(isa) << " not available on this machine";
  }
  std::mt19937_64 rng(42);
  for (std::size_t n = 0; n <= 67; ++n) {
    const Batch b = RandomBatch(n, rng);
    std::vector<double> ref_theta, ref_omega, theta, omega;
    RunKernel(Isa::kScalar, b, ref_theta, ref_omega);
    RunKernel(isa, b, theta, omega);
    ASSERT_EQ(std::memcmp(theta.data(), ref_theta.data(), n * sizeof(double)),
              0)
        << "theta differs at n=" << n;
    ASSERT_EQ(std::memcmp(omega.data(), ref_omega.data(), n * sizeof(double)),
              0)
        << "omega differs at n=" << n;
  }
}

TEST_P(KinematicsEquivalenceTest, LargeBatch) {
  const Isa isa = GetParam();
  if (!IsaSupported(isa)) GTEST_SKIP();
  std::mt19937_64 rng(7);
  const Batch b = RandomBatch(100003, rng);
  std::vector<double> ref_theta, ref_omega, theta, omega;
  RunKernel(Isa::kScalar, b, ref_theta, ref_omega);
  RunKernel(isa, b, theta, omega);
  EXPECT_EQ(theta, ref_theta);
  EXPECT_EQ(omega, ref_omega);
}

INSTANTIATE_TEST_SUITE_P(AllVariants, KinematicsEquivalenceTest,
                         ::testing::Values(Isa::kScalar, Isa::kAvx2,
                                           Isa::kNeon),
                         [](const auto& info) {
                           return std::string(IsaName(info.param));
                         });

TEST(KinematicsDispatchTest, BestVariantIsSupported) {
  EXPECT_TRUE(IsaSupported(Isa::kScalar));
  EXPECT_TRUE(IsaSupported(BestSupportedIsa()));
}

TEST(KinematicsDispatchTest, RejectsMismatchedSpans) {
  std::vector<double> a(4), b(3), out(4);
  EXPECT_THROW(EvaluateKinematics(Isa::kScalar, {a, a, a, b}, {out, out}),
               std::invalid_argument);
}

TEST(KinematicsDispatchTest, RejectsUnsupportedVariant) {
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (IsaSupported(isa)) continue;
    std::vector<double> a(2), out(2);
    EXPECT_THROW(EvaluateKinematics(isa, {a, a, a, a}, {out, out}),
                 std::invalid_argument);
  }
}

}  // namespace
}  // namespace kick::simd
