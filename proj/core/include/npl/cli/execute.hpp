// Copyright 2026 The npl Authors
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

#ifndef NPL_CLI_EXECUTE_HPP_
#define NPL_CLI_EXECUTE_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "npl/cli/plan.hpp"

namespace npl::cli {

struct ExecutionResult {
  int exit_code = 0;  // 0 zero/none-found/accept, 1 nonzero/witness/reject, 2 error
  nlohmann::json results;
};

/// Runs the plan. Throws npl::Error or UsageError for bad inputs.
ExecutionResult ExecutePlan(const ExperimentPlan& plan);

/// The deterministic part of a report: {"plan": ..., "results": ...}.
nlohmann::json ReportBody(const ExperimentPlan& plan, const nlohmann::json& results);

struct CliOutput {
  int exit_code = 0;
  std::string out;  // report text (empty when written to --out)
  std::string err;  // diagnostics
};

/// Parse, execute, and render {"header", "plan", "results"}. The header
/// carries the tool version and wall-clock time; nothing else in the
/// report depends on timing.
CliOutput RunCli(const std::vector<std::string>& args, const std::map<std::string, std::string>& env = {});

}  // namespace npl::cli

#endif  // NPL_CLI_EXECUTE_HPP_
