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

#ifndef NPL_CLI_PLAN_HPP_
#define NPL_CLI_PLAN_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/prime_field.hpp"
#include "npl/algebra/sparse_poly.hpp"
#include "npl/circuits/families.hpp"
#include "npl/pit/engines.hpp"

namespace npl::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Thrown for malformed command lines; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One fully resolved invocation. Fields a command does not read keep
/// their defaults and are still echoed, so a report suffices to rerun.
struct ExperimentPlan {
  std::string command;  // pit | hit-check | audit | rank | gen | ips-verify | ips-from-cnf
  std::uint64_t field = PrimeField::kMersenne31;
  std::uint64_t seed = 0;
  std::uint64_t trials = 25;
  std::uint64_t term_cap = kDefaultTermCap;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::uint32_t jobs = 1;
  bool exhaustive = false;
  std::string engine = "auto";  // auto | exhaustive | sz
  std::string out;
  bool pretty = false;

  std::string circuit;  // pit
  std::string meta;     // hit-check, audit, gen
  std::string family;   // hit-check, audit
  std::string space;    // "V:D" or "V:<=D"
  std::string hard;     // audit: poly file or "cv:c0,c1,..."
  std::string poly;     // rank: poly file or "cv:..."
  std::uint32_t k = 1;
  std::uint32_t shift = 0;
  bool matrix = false;  // rank: include the matrix
  std::uint32_t n = 2;  // gen
  std::string cnf;      // ips-verify, ips-from-cnf
  std::string system;   // ips-verify
  std::string cert;     // ips-verify

  friend bool operator==(const ExperimentPlan&, const ExperimentPlan&) = default;
};

/// args excludes the program name. env supplies NPL_DEFAULT_FIELD.
/// Throws UsageError on unknown flags, bad values, or a composite modulus.
ExperimentPlan ParsePlan(const std::vector<std::string>& args,
                         const std::map<std::string, std::string>& env = {});

nlohmann::json PlanToJson(const ExperimentPlan& plan);
ExperimentPlan PlanFromJson(const nlohmann::json& j);

/// "3:2" is Poly^2(3); "3:<=2" is Poly^{<=2}(3). Throws UsageError.
PolySpace ParseSpace(const std::string& text);

/// squares | full | full-space | sps:k=K | detproj:n=N | sparse:s=S.
FamilyDescriptor ParseFamily(const std::string& text, const PolySpace& space);

}  // namespace npl::cli

#endif  // NPL_CLI_PLAN_HPP_
