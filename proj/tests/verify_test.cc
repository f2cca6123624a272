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

#include "kick/verify.h"

#include <gtest/gtest.h>

#include <cmath>

#include "kick/planner.h"
#include "oracles.h"
#include "test_support.h"

namespace kick {
namespace {

using testing::FiveMassLeg;
using testing::RandomKicks;
using testing::ReferenceParams;

KickPlan SingleSegment(double alpha, double duration) {
  PlanValues v;
  v.kick_time = duration;
  const PhaseSegment s{.phase = Phase::kSwing,
                       .t_start = 0.0,
                       .duration = duration,
                       .theta_start = 0.0,
                       .omega_start = 0.0,
                       .alpha = alpha};
  return KickPlan(v, {s});
}

TEST(IntegrateNumericTest, ConstantAccelerationOverAlignedGrid) {
  // Semi-implicit Euler over n steps lands at alpha*T^2*(n+1)/(2n).
  const auto states = IntegrateNumeric(SingleSegment(2.0, 1.0), 0.001);
  ASSERT_EQ(states.size(), 1001u);
  EXPECT_NEAR(states.back().t, 1.0, 1e-15);
  EXPECT_NEAR(states.back().omega, 2.0, 1e-12);
  EXPECT_NEAR(states.back().theta, 1.001, 1e-12);
}

TEST(IntegrateNumericTest, ShortensTheFinalSubstep) {
  const auto states = IntegrateNumeric(SingleSegment(2.0, 1.0), 0.3);
  // 0, 0.3, 0.6, 0.9, 1.0
  ASSERT_EQ(states.size(), 5u);
  EXPECT_DOUBLE_EQ(states.back().t, 1.0);
  EXPECT_NEAR(states.back().omega, 2.0, 1e-12);
  // omega: 0.6, 1.2, 1.8, 2.0 -> theta: 0.18 + 0.36 + 0.54 + 0.2
  EXPECT_NEAR(states.back().theta, 1.28, 1e-12);
}

TEST(IntegrateNumericTest, EmptyPlanStaysAtRest) {
  PlanValues v;
  const KickPlan plan(v, {});
  const auto states = IntegrateNumeric(plan, 0.01);
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(OracleDeviation(plan, 0.01), 0.0);
}

TEST(IntegrateNumericTest, RejectsNonPositiveStep) {
  EXPECT_THROW(IntegrateNumeric(SingleSegment(1, 1), 0), InvalidParamError);
}

TEST(OracleDeviationTest, ReferencePlanAgreesWithClosedForm) {
  const KickPlan plan = PlanKick(ReferenceParams(), FiveMassLeg());
  EXPECT_LT(OracleDeviation(plan, kOracleStep), kOracleTolerance);
}

TEST(OracleDeviationTest, ShrinksWithTheStep) {
  const KickPlan plan = PlanKick(ReferenceParams(), FiveMassLeg());
  const double coarse = OracleDeviation(plan, 1e-3);
  const double fine = OracleDeviation(plan, 1e-4);
  EXPECT_LT(fine, 0.2 * coarse);
}

TEST(CheckPlanTest, ReferencePlanPasses) {
  const KickParams params = ReferenceParams();
  const KickPlan plan = PlanKick(params, FiveMassLeg());
  const PlanReport report = CheckPlan(plan, params);
  EXPECT_TRUE(report.passed());
  EXPECT_LT(report.start.theta, kContinuityTolerance);
  EXPECT_LT(report.end.theta, kContinuityTolerance);
  EXPECT_LT(report.end.omega, kContinuityTolerance);
  EXPECT_LT(report.frequency_residual, 1e-12);
  EXPECT_TRUE(report.limit_violations.empty());
  EXPECT_EQ(report.continuity.size(), plan.segments().size() - 1);
  EXPECT_DOUBLE_EQ(report.max_acceleration, plan.values().kick_acceleration);
  // Return-back peak sqrt(alpha * theta_post).
  EXPECT_NEAR(report.max_velocity, std::sqrt(20.0 * 1.88539816339744830962),
              1e-12);
}

TEST(CheckPlanTest, FlagsOvershootPastTheJointLimit) {
  KickParams params = ReferenceParams();
  const KickPlan plan = PlanKick(params, FiveMassLeg());
  params.swing_angle_max = 1.5;  // below theta_post = 1.885
  const PlanReport report = CheckPlan(plan, params);
  EXPECT_FALSE(report.passed());
  ASSERT_EQ(report.limit_violations.size(), 1u);
  EXPECT_EQ(report.limit_violations[0].kind, LimitKind::kAngleMax);
  EXPECT_NEAR(report.limit_violations[0].excess, 1.88539816339744830962 - 1.5,
              1e-12);
  EXPECT_EQ(LimitName(LimitKind::kAngleMax), "theta_max");
}

TEST(CheckPlanTest, ReportsTheSizeOfAGapBetweenSegments) {
  const KickParams params = ReferenceParams();
  const KickPlan plan = PlanKick(params, FiveMassLeg());
  std::vector<PhaseSegment> segments(plan.segments().begin(),
                                     plan.segments().end());
  segments[2].theta_start += 0.01;
  const PlanReport report =
      CheckPlan(KickPlan(plan.values(), segments), params);
  EXPECT_FALSE(report.passed());
  EXPECT_NEAR(report.continuity[1].theta, 0.01, 1e-12);
  EXPECT_EQ(report.continuity[1].index, 2u);
}

TEST(CheckPlanTest, RandomPlansAllPass) {
  RandomKicks kicks(31);
  for (int i = 0; i < 300; ++i) {
    const auto c = kicks.Next();
    const PlanReport report = CheckPlan(c.plan, c.params);
    EXPECT_TRUE(report.passed()) << "case " << i;
  }
}

TEST(EstimateBallLaunchTest, RestingFootLaunchesNothing) {
  const LaunchEstimate e = EstimateBallLaunch(0.0, 0.6, 0.1, ImpactModel{});
  EXPECT_EQ(e.foot_speed, 0.0);
  EXPECT_EQ(e.ball_speed, 0.0);
  EXPECT_EQ(e.range, 0.0);
}

TEST(EstimateBallLaunchTest, ElasticHeavyFootDoublesFootSpeed) {
  ImpactModel m;
  m.restitution = 1.0;
  m.effective_foot_mass = 1e12;
  const LaunchEstimate e = EstimateBallLaunch(4.0, 0.6, 0.1, m);
  EXPECT_NEAR(e.ball_speed, 2.0 * e.foot_speed, 1e-10);
}

TEST(EstimateBallLaunchTest, ReferenceImpact) {
  ImpactModel m;
  m.launch_angle = 0.0;
  const LaunchEstimate e = EstimateBallLaunch(6.0, 0.6, 0.1, m);
  EXPECT_NEAR(e.foot_speed, 3.0, 1e-15);
  // 1.6 * 2.0 / 2.45 * 3.0
  EXPECT_NEAR(e.ball_speed, 3.918367346938776, 1e-14);
  EXPECT_NEAR(e.impulse, 0.45 * 3.918367346938776, 1e-14);
  // Horizontal launch from r_b: v * sqrt(2 r_b / g).
  EXPECT_NEAR(e.range, 3.918367346938776 * 0.14278431229270644, 1e-12);
}

TEST(EstimateBallLaunchTest, RangeGrowsWithKickVelocity) {
  double previous = -1.0;
  for (double w = 0.5; w <= 12.0; w += 0.5) {
    const double range = EstimateBallLaunch(w, 0.6, 0.1, ImpactModel{}).range;
    EXPECT_GT(range, previous);
    previous = range;
  }
}

TEST(EstimateBallLaunchTest, RejectsBadImpactModels) {
  ImpactModel m;
  m.restitution = 1.5;
  EXPECT_THROW(EstimateBallLaunch(1, 0.6, 0.1, m), InvalidParamError);
  EXPECT_THROW(EstimateBallLaunch(-1, 0.6, 0.1, {}), InvalidParamError);
  EXPECT_THROW(EstimateBallLaunch(1, 0.1, 0.1, {}), InvalidParamError);
}

}  // namespace
}  // namespace kick
