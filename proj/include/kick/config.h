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

#ifndef KICK_CONFIG_H_
#define KICK_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "kick/planner.h"
#include "kick/types.h"
#include "kick/verify.h"

namespace kick {

inline constexpr int kConfigSchemaVersion = 1;

// Raised for unreadable, malformed or schema-invalid config files. `field()`
// is the config key at fault.
class ConfigError : public InvalidParamError {
 public:
  using InvalidParamError::InvalidParamError;
};

// Everything a kick config file describes. Angles are already converted to
// radians.
struct KickConfig {
  KickParams params;
  LegMassModel leg;
  PlannerOptions planner;
  ImpactModel impact;
};

// Parses the flat `key = value` format documented in docs/config.md and
// validates the result. Throws ConfigError naming the offending key.
KickConfig ParseConfig(std::string_view text);
KickConfig LoadConfig(const std::filesystem::path& path);

// Config key holding the KickParams field reported by InvalidParamError
// (e.g. "x_b" -> "ball_distance"). Returns the input when unmapped.
std::string_view ConfigKeyForField(std::string_view field);

}  // namespace kick

#endif  // KICK_CONFIG_H_
