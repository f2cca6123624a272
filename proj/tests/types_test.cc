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

#include "kick/types.h"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <string>

namespace kick {
namespace {

KickParams ValidParams() {
  KickParams p;
  p.ball_radius = 0.1;
  p.ball_distance = 0.6;
  p.hip_height = 0.6;
  p.hip_torque = 50;
  p.hip_velocity_max = 8;
  p.extension_angle = 0.1;
  p.swing_angle_min = -1.2;
  p.swing_angle_max = 1.6;
  p.nominal_step_frequency = 2.4;
  return p;
}

std::string FieldOf(const KickParams& p) {
  try {
    ValidateParams(p);
  } catch (const InvalidParamError& e) {
    return e.field();
  }
  return "";
}

TEST(ValidateParamsTest, AcceptsReferenceParams) {
  const KickParams p = ValidParams();
  EXPECT_EQ(&ValidateParams(p), &p);
}

TEST(ValidateParamsTest, BallDistanceInsideBallIsRejected) {
  KickParams p = ValidParams();
  p.ball_distance = 0.05;
  try {
    ValidateParams(p);
    FAIL() << "expected InvalidParamError";
  } catch (const InvalidParamError& e) {
    EXPECT_EQ(e.field(), "x_b");
    EXPECT_STREQ(e.what(), "x_b must exceed r_b");
  }
}

TEST(ValidateParamsTest, HipAtBallHeightIsRejected) {
  KickParams p = ValidParams();
  p.hip_height = 0.1;
  try {
    ValidateParams(p);
    FAIL() << "expected InvalidParamError";
  } catch (const InvalidParamError& e) {
    EXPECT_EQ(e.field(), "z_h");
    EXPECT_STREQ(e.what(), "z_h must exceed r_b");
  }
}

TEST(ValidateParamsTest, EachInvariantNamesItsField) {
  struct Case {
    std::function<void(KickParams&)> mutate;
    std::string field;
  };
  const Case cases[] = {
      {[](KickParams& p) { p.ball_radius = 0; }, "r_b"},
      {[](KickParams& p) { p.hip_torque = -1; }, "tau_h"},
      {[](KickParams& p) { p.hip_velocity_max = 0; }, "omega_h_max"},
      {[](KickParams& p) { p.kick_velocity = -2; }, "omega_k_req"},
      {[](KickParams& p) { p.extension_angle = -0.01; }, "theta_ext"},
      {[](KickParams& p) { p.swing_angle_min = 0.0; }, "theta_min"},
      {[](KickParams& p) { p.swing_angle_max = -0.1; }, "theta_max"},
      {[](KickParams& p) { p.nominal_step_frequency = 0; }, "f_nominal"},
      {[](KickParams& p) { p.hip_torque = std::nan(""); }, "tau_h"},
  };
  for (const Case& c : cases) {
    KickParams p = ValidParams();
    c.mutate(p);
    EXPECT_EQ(FieldOf(p), c.field);
  }
}

TEST(ValidateLegModelTest, RejectsDegenerateModels) {
  EXPECT_THROW(ValidateLegModel({}), InvalidParamError);
  EXPECT_THROW(ValidateLegModel({{{1.0, 0.0}, {2.0, 0.0}}}), InvalidParamError);
  EXPECT_THROW(ValidateLegModel({{{0.0, 0.3}}}), InvalidParamError);
  EXPECT_THROW(ValidateLegModel({{{1.0, -0.3}}}), InvalidParamError);
  EXPECT_NO_THROW(ValidateLegModel({{{2.0, 0.0}, {1.0, 0.3}}}));
}

TEST(PhaseSegmentTest, PropagatesConstantAcceleration) {
  const PhaseSegment s{.phase = Phase::kSwing,
                       .t_start = 1.0,
                       .duration = 0.5,
                       .theta_start = 0.25,
                       .omega_start = -1.0,
                       .alpha = 4.0};
  EXPECT_DOUBLE_EQ(s.t_end(), 1.5);
  EXPECT_DOUBLE_EQ(s.theta_end(), 0.25 - 0.5 + 0.5 * 4.0 * 0.25);
  EXPECT_DOUBLE_EQ(s.omega_end(), 1.0);
}

TEST(KickPlanTest, NegativeDurationsAreRejected) {
  PlanValues v;
  v.kick_time = 1.0;
  EXPECT_NO_THROW(KickPlan(v, {}));

  PlanValues bad = v;
  bad.return_time = -0.1;
  EXPECT_THROW(KickPlan(bad, {}), InvalidParamError);

  std::vector<PhaseSegment> segments(1);
  segments[0].duration = -1e-3;
  EXPECT_THROW(KickPlan(v, segments), InvalidParamError);
}

TEST(PhaseNameTest, RoundTripsLowercaseNames) {
  for (Phase p :
       {Phase::kPrepare, Phase::kSwing, Phase::kContinue, Phase::kReturn}) {
    EXPECT_EQ(ParsePhase(PhaseName(p)), p);
  }
  EXPECT_EQ(PhaseName(Phase::kContinue), "continue");
  EXPECT_FALSE(ParsePhase("Swing").has_value());
}

}  // namespace
}  // namespace kick
