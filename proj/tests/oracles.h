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

#ifndef KICK_TESTS_ORACLES_H_
#define KICK_TESTS_ORACLES_H_

// Test-only reference computations. None of these call into the library;
// they recompute expected values by a different route.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace kick::testing {

inline constexpr double kPi = 3.14159265358979323846;

// arctan via its Maclaurin series after reducing |x| <= tan(pi/12).
inline double ArctanSeries(double x) {
  if (x < 0) return -ArctanSeries(-x);
  if (x > 1.0) return kPi / 2 - ArctanSeries(1.0 / x);
  const double tan_pi_12 = 2.0 - std::sqrt(3.0);
  if (x > tan_pi_12) {
    // atan(x) = pi/6 + atan((x - 1/sqrt3) / (1 + x/sqrt3))
    const double s3 = std::sqrt(3.0);
    return kPi / 6 + ArctanSeries((x * s3 - 1.0) / (s3 + x));
  }
  double term = x, sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    sum += term / (2 * k + 1);
    term *= -x * x;
  }
  return sum;
}

// atan2 for a point in the first quadrant.
inline double ArctanQuadrant1(double y, double x) {
  return ArctanSeries(y / x);
}

inline double SinSeries(double x) {
  double term = x, sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    sum += term;
    term *= -x * x / ((2 * k) * (2 * k + 1));
  }
  return sum;
}

inline double CosSeries(double x) {
  double term = 1.0, sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    sum += term;
    term *= -x * x / ((2 * k - 1) * (2 * k));
  }
  return sum;
}

// Forward Euler on constant acceleration from rest until `target_velocity`
// is reached. Returns (time, angle).
inline std::pair<double, double> EulerAccelerateTo(double target_velocity,
                                                   double acceleration,
                                                   double dt) {
  double t = 0.0, theta = 0.0, omega = 0.0;
  while (omega + acceleration * dt <= target_velocity) {
    theta += omega * dt;
    omega += acceleration * dt;
    t += dt;
  }
  const double rest = (target_velocity - omega) / acceleration;
  theta += omega * rest;
  t += rest;
  return {t, theta};
}

struct Burn {
  double duration;
  double acceleration;
};

// Integrates a piecewise-constant acceleration schedule with fixed steps and
// a trapezoidal angle update. Returns (theta, omega) at the end.
inline std::pair<double, double> IntegrateSchedule(
    const std::vector<Burn>& schedule, double theta0, double omega0,
    double dt) {
  double theta = theta0, omega = omega0;
  for (const Burn& b : schedule) {
    double left = b.duration;
    while (left > 0) {
      const double h = left < dt ? left : dt;
      const double next = omega + b.acceleration * h;
      theta += 0.5 * (omega + next) * h;
      omega = next;
      left -= h;
    }
  }
  return {theta, omega};
}

}  // namespace kick::testing

#endif  // KICK_TESTS_ORACLES_H_
