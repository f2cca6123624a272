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

#ifndef KICK_TYPES_H_
#define KICK_TYPES_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kick {

// Sign convention: positive swing angle is the forward (kicking) direction.
// All angles are radians, angular velocities rad/s, times seconds.

enum class Phase { kPrepare, kSwing, kContinue, kReturn };

// Lowercase name used in CSV/JSON output.
std::string_view PhaseName(Phase phase);
std::optional<Phase> ParsePhase(std::string_view name);

// Raised when an input violates one of its invariants. `field()` names the
// offending field.
class InvalidParamError : public std::invalid_argument {
 public:
  InvalidParamError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Raised when the requested kick cannot be realized within joint or
// actuator limits.
class InfeasibleKickError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KickParams {
  double ball_radius = 0.0;       // m
  double ball_distance = 0.0;     // foot tip to ball center, m
  double hip_height = 0.0;        // mean hip-origin height over a gait cycle, m
  double hip_torque = 0.0;        // available hip torque, N*m
  double hip_velocity_max = 0.0;  // rad/s
  std::optional<double> kick_velocity;  // requested; empty = fastest feasible
  double extension_angle = 0.0;         // follow-through past impact, rad
  double swing_angle_min = 0.0;         // rear hip limit (< 0), rad
  double swing_angle_max = 0.0;         // front hip limit (> 0), rad
  double nominal_step_frequency = 0.0;  // Hz
};

// Throws InvalidParamError for the first violated invariant.
const KickParams& ValidateParams(const KickParams& params);

struct PointMass {
  double mass = 0.0;      // kg
  double distance = 0.0;  // from the hip pitch axis, m
};

// Point-mass decomposition of the kicking leg about the hip pivot.
struct LegMassModel {
  std::vector<PointMass> masses;
};

const LegMassModel& ValidateLegModel(const LegMassModel& model);

// One constant-acceleration interval of the swing-angle profile.
struct PhaseSegment {
  Phase phase = Phase::kSwing;
  double t_start = 0.0;
  double duration = 0.0;
  double theta_start = 0.0;
  double omega_start = 0.0;
  double alpha = 0.0;

  double t_end() const { return t_start + duration; }
  double AngleAt(double tau) const {
    return theta_start + omega_start * tau + 0.5 * alpha * tau * tau;
  }
  double VelocityAt(double tau) const { return omega_start + alpha * tau; }
  double theta_end() const { return AngleAt(duration); }
  double omega_end() const { return VelocityAt(duration); }
};

// How the swing is realized when the pre-swing angle lies on the way to the
// kick angle (no wind-up needed).
enum class SwingMode {
  // Accelerate at full alpha_k to omega_k, then coast to the kick angle.
  kCoast,
  // Lower the swing acceleration so omega_k is reached exactly at the kick
  // angle.
  kReducedAcceleration,
};

enum class SwingBranch {
  kSwingUp,              // negative pre-swing angle, Prepare phase emitted
  kCoast,                // accelerate then coast
  kReducedAcceleration,  // single reduced-acceleration swing
};

std::string_view SwingBranchName(SwingBranch branch);

struct PlanValues {
  double kick_acceleration = 0.0;   // alpha_k, rad/s^2
  double swing_acceleration = 0.0;  // equals alpha_k except reduced mode
  double kick_velocity = 0.0;       // omega_k, rad/s
  double kick_angle = 0.0;          // theta_k
  double swing_angle = 0.0;         // theta_sw
  double pre_swing_angle = 0.0;     // theta_pre
  double return_angle = 0.0;        // theta_ret
  double post_angle = 0.0;          // theta_post
  double prepare_time = 0.0;        // t_pre
  double swing_time = 0.0;          // t_sw
  double coast_time = 0.0;          // zero unless branch is kCoast
  double extension_time = 0.0;      // t_ext
  double return_time = 0.0;         // t_ret
  double kick_time = 0.0;           // t_k
  double step_frequency = 0.0;      // f_g
  SwingBranch branch = SwingBranch::kSwingUp;
  // Geometry needed to turn swing angles into foot offsets.
  double hip_height = 0.0;
  double ball_radius = 0.0;
};

// A solved kick. Immutable once built.
class KickPlan {
 public:
  // Throws InvalidParamError if any duration is negative.
  KickPlan(const PlanValues& values, std::vector<PhaseSegment> segments);

  const PlanValues& values() const { return values_; }
  std::span<const PhaseSegment> segments() const { return segments_; }
  double duration() const { return values_.kick_time; }

 private:
  PlanValues values_;
  std::vector<PhaseSegment> segments_;
};

// State of the kick at one instant.
struct TrajectorySample {
  double t = 0.0;
  double theta = 0.0;  // swing angle
  double omega = 0.0;
  double alpha = 0.0;
  double x_offset = 0.0;  // sagittal foot offset, forward, m
  double z_offset = 0.0;  // sagittal foot offset, up, m
  Phase phase = Phase::kSwing;
};

}  // namespace kick

#endif  // KICK_TYPES_H_
