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

#include "kick/cli.h"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kick/config.h"
#include "kick/io.h"
#include "kick/planner.h"
#include "kick/trajectory.h"
#include "kick/verify.h"

namespace kick::cli {
namespace {

struct Options {
  std::string config;
  std::string out;
  std::string format = "text";
  std::string plan_file;
  double dt = 0.01;
};

// Writes `text` to `path`, or to `out` when path is empty.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file) throw InvalidParamError("out", "cannot write output file " + path);
}

int CmdPlan(const Options& o, std::ostream& out) {
  const KickConfig config = LoadConfig(o.config);
  const KickPlan plan = PlanKick(config.params, config.leg, config.planner);
  if (o.format == "json") {
    out << PlanToJson(plan);
  } else {
    out << FormatPlanSummary(plan);
  }
  if (!o.out.empty()) Emit(o.out, PlanToJson(plan), out);
  return kExitOk;
}

int CmdSample(const Options& o, std::ostream& out) {
  if (!(o.dt > 0)) throw InvalidParamError("dt", "--dt must be positive");
  const KickConfig config = LoadConfig(o.config);
  const KickPlan plan = PlanKick(config.params, config.leg, config.planner);
  const std::vector<TrajectorySample> samples = SampleTrajectory(plan, o.dt);
  std::ostringstream text;
  if (o.format == "json") {
    WriteSamplesJson(text, samples);
  } else {
    WriteSamplesCsv(text, samples);
  }
  Emit(o.out, text.str(), out);
  return kExitOk;
}

int CmdCheck(const Options& o, std::ostream& out) {
  const KickConfig config = LoadConfig(o.config);
  std::optional<KickPlan> plan;
  if (o.plan_file.empty()) {
    plan.emplace(PlanKick(config.params, config.leg, config.planner));
  } else {
    std::ifstream in(o.plan_file);
    if (!in) throw InvalidParamError("plan", "cannot read " + o.plan_file);
    std::ostringstream text;
    text << in.rdbuf();
    plan.emplace(PlanFromJson(text.str()));
  }
  const PlanReport report = CheckPlan(*plan, config.params);
  out << FormatReport(report);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int CmdEstimate(const Options& o, std::ostream& out) {
  const KickConfig config = LoadConfig(o.config);
  const KickPlan plan = PlanKick(config.params, config.leg, config.planner);
  const LaunchEstimate e =
      EstimateBallLaunch(plan.values().kick_velocity, config.params.hip_height,
                         config.params.ball_radius, config.impact);
  if (o.format == "json") {
    nlohmann::json doc = {{"omega_k", plan.values().kick_velocity},
                          {"v_foot", e.foot_speed},
                          {"impulse", e.impulse},
                          {"v_ball", e.ball_speed},
                          {"range", e.range}};
    out << doc.dump(2) << '\n';
  } else {
    out << FormatLaunchEstimate(e);
  }
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Constraint-aware kick trajectory planner"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&o](CLI::App* cmd) {
    cmd->add_option("config", o.config, "Kick config file")->required();
  };
  const std::vector<std::string> text_or_json = {"text", "json"};

  CLI::App* plan = app.add_subcommand("plan", "Solve the kick and print it");
  add_config(plan);
  plan->add_option("--out", o.out, "Also write the plan as JSON to this file");
  plan->add_option("--format", o.format, "Summary format")
      ->check(CLI::IsMember(text_or_json));

  CLI::App* sample =
      app.add_subcommand("sample", "Sample the trajectory as CSV or JSON");
  add_config(sample);
  sample->add_option("--dt", o.dt, "Sampling step in seconds")
      ->capture_default_str();
  sample->add_option("--out", o.out, "Output file (default: stdout)");
  sample->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* check =
      app.add_subcommand("check", "Check a plan against the config limits");
  add_config(check);
  check->add_option("--plan", o.plan_file,
                    "Plan JSON written by `plan --out` (default: solve)");

  CLI::App* estimate = app.add_subcommand(
      "estimate", "Estimate ball launch for the planned kick velocity");
  add_config(estimate);
  estimate->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember(text_or_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*plan) return CmdPlan(o, out);
    if (*sample) return CmdSample(o, out);
    if (*check) return CmdCheck(o, out);
    if (*estimate) return CmdEstimate(o, out);
  } catch (const InfeasibleKickError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InvalidParamError& e) {
    err << "config error [" << e.field() << "]: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace kick::cli
