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

#ifndef KICK_IO_H_
#define KICK_IO_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "kick/types.h"
#include "kick/verify.h"

namespace kick {

inline constexpr std::string_view kSampleCsvHeader =
    "t,phase,theta_l,omega_l,alpha,x_o,z_o";

// Locale-independent fixed notation. A result that rounds to zero is printed
// without a minus sign.
std::string FormatFixed(double value, int decimals);

// CSV with kSampleCsvHeader and six decimals per value.
void WriteSamplesCsv(std::ostream& out,
                     std::span<const TrajectorySample> samples);
void WriteSamplesJson(std::ostream& out,
                      std::span<const TrajectorySample> samples);

// Plan round trip. Doubles are written with round-trip precision.
std::string PlanToJson(const KickPlan& plan);
// Throws InvalidParamError (field "plan") for malformed input and for
// negative durations.
KickPlan PlanFromJson(std::string_view text);

// Human-readable renderings used by the CLI.
std::string FormatPlanSummary(const KickPlan& plan);
std::string FormatReport(const PlanReport& report);
std::string FormatLaunchEstimate(const LaunchEstimate& estimate);

}  // namespace kick

#endif  // KICK_IO_H_
