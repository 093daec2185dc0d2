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

#include "npl/cli/plan.hpp"

#include <charconv>
#include <sstream>

#include <CLI11.hpp>

#include "npl/error.hpp"

namespace npl::cli {

namespace {

const char* const kCommands[] = {"pit", "hit-check", "audit", "rank", "gen", "ips-verify", "ips-from-cnf"};

std::uint64_t ParseUnsigned(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

void RequirePositive(std::uint64_t value, const char* flag) {
  if (value == 0) throw UsageError(std::string(flag) + " must be positive");
}

}  // namespace

ExperimentPlan ParsePlan(const std::vector<std::string>& args, const std::map<std::string, std::string>& env) {
  ExperimentPlan plan;
  if (auto it = env.find("NPL_DEFAULT_FIELD"); it != env.end() && !it->second.empty()) {
    plan.field = ParseUnsigned(it->second, "NPL_DEFAULT_FIELD");
  }

  CLI::App app{"Meta-polynomial and succinct hitting-set experiments", "npl"};
  app.require_subcommand(1, 1);
  app.set_help_flag();
  app.add_option("--field", plan.field, "prime modulus p");
  app.add_option("--seed", plan.seed, "base seed");
  app.add_option("--trials", plan.trials, "random trials");
  app.add_option("--term-cap", plan.term_cap, "maximum terms in an expanded polynomial");
  app.add_option("--enum-budget", plan.enumeration_budget, "maximum points or members enumerated");
  app.add_option("--jobs", plan.jobs, "worker threads");
  app.add_flag("--exhaustive", plan.exhaustive, "enumerate instead of sampling");
  app.add_option("--engine", plan.engine, "PIT engine")->check(CLI::IsMember({"auto", "exhaustive", "sz"}));
  app.add_option("--out", plan.out, "write the report here instead of stdout");
  app.add_flag("--pretty", plan.pretty, "indented JSON");
  app.add_option("--circuit", plan.circuit, "circuit JSON file");
  app.add_option("--meta", plan.meta, "disc | partials-minor:k=K,r=R | shifted-minor:k=K,l=L,r=R | coord:I | file");
  app.add_option("--family", plan.family, "squares | full | sps:k=K | detproj:n=N | sparse:s=S");
  app.add_option("--space", plan.space, "V:D or V:<=D");
  app.add_option("--hard", plan.hard, "polynomial JSON file or cv:c0,c1,...");
  app.add_option("--poly", plan.poly, "polynomial JSON file or cv:c0,c1,...");
  app.add_option("--k", plan.k, "derivative order");
  app.add_option("--shift", plan.shift, "shift degree");
  app.add_flag("--matrix", plan.matrix, "include the matrix in the report");
  app.add_option("--n", plan.n, "determinant side");
  app.add_option("--cnf", plan.cnf, "DIMACS file");
  app.add_option("--system", plan.system, "polynomial system JSON file");
  app.add_option("--cert", plan.cert, "certificate circuit JSON file");
  for (const char* name : kCommands) app.add_subcommand(name)->fallthrough();

  std::vector<const char*> argv = {"npl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  plan.command = app.get_subcommands().front()->get_name();

  if (plan.field < 2 || plan.field >= PrimeField::kMaxModulus || !IsPrime(plan.field)) {
    throw UsageError("--field: " + std::to_string(plan.field) + " is not a prime below 2^62");
  }
  RequirePositive(plan.trials, "--trials");
  RequirePositive(plan.term_cap, "--term-cap");
  RequirePositive(plan.enumeration_budget, "--enum-budget");
  RequirePositive(plan.jobs, "--jobs");
  if (plan.exhaustive) {
    if (plan.engine == "sz") throw UsageError("--exhaustive conflicts with --engine sz");
    plan.engine = "exhaustive";
  } else if (plan.engine == "exhaustive") {
    plan.exhaustive = true;
  }
  return plan;
}

nlohmann::json PlanToJson(const ExperimentPlan& p) {
  return {{"command", p.command},
          {"field", p.field},
          {"seed", p.seed},
          {"trials", p.trials},
          {"term_cap", p.term_cap},
          {"enumeration_budget", p.enumeration_budget},
          {"jobs", p.jobs},
          {"exhaustive", p.exhaustive},
          {"engine", p.engine},
          {"out", p.out},
          {"pretty", p.pretty},
          {"circuit", p.circuit},
          {"meta", p.meta},
          {"family", p.family},
          {"space", p.space},
          {"hard", p.hard},
          {"poly", p.poly},
          {"k", p.k},
          {"shift", p.shift},
          {"matrix", p.matrix},
          {"n", p.n},
          {"cnf", p.cnf},
          {"system", p.system},
          {"cert", p.cert}};
}

ExperimentPlan PlanFromJson(const nlohmann::json& j) {
  ExperimentPlan p;
  try {
    p.command = j.at("command").get<std::string>();
    p.field = j.at("field").get<std::uint64_t>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.trials = j.at("trials").get<std::uint64_t>();
    p.term_cap = j.at("term_cap").get<std::uint64_t>();
    p.enumeration_budget = j.at("enumeration_budget").get<std::uint64_t>();
    p.jobs = j.at("jobs").get<std::uint32_t>();
    p.exhaustive = j.at("exhaustive").get<bool>();
    p.engine = j.at("engine").get<std::string>();
    p.out = j.at("out").get<std::string>();
    p.pretty = j.at("pretty").get<bool>();
    p.circuit = j.at("circuit").get<std::string>();
    p.meta = j.at("meta").get<std::string>();
    p.family = j.at("family").get<std::string>();
    p.space = j.at("space").get<std::string>();
    p.hard = j.at("hard").get<std::string>();
    p.poly = j.at("poly").get<std::string>();
    p.k = j.at("k").get<std::uint32_t>();
    p.shift = j.at("shift").get<std::uint32_t>();
    p.matrix = j.at("matrix").get<bool>();
    p.n = j.at("n").get<std::uint32_t>();
    p.cnf = j.at("cnf").get<std::string>();
    p.system = j.at("system").get<std::string>();
    p.cert = j.at("cert").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("plan: ") + e.what());
  }
  return p;
}

PolySpace ParseSpace(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--space: expected V:D or V:<=D, got '" + text + "'");
  const std::string v = text.substr(0, colon);
  std::string d = text.substr(colon + 1);
  const bool at_most = d.rfind("<=", 0) == 0;
  if (at_most) d = d.substr(2);
  const auto vars = static_cast<std::uint32_t>(ParseUnsigned(v, "--space variables"));
  const auto deg = static_cast<std::uint32_t>(ParseUnsigned(d, "--space degree"));
  if (vars == 0) throw UsageError("--space: at least one variable required");
  return at_most ? PolySpace::AtMost(vars, deg) : PolySpace::Homogeneous(vars, deg);
}

FamilyDescriptor ParseFamily(const std::string& text, const PolySpace& space) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--family: expected key=value, got '" + item + "'");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto param = [&](const char* key) -> std::uint32_t {
    auto it = params.find(key);
    if (it == params.end()) throw UsageError("--family " + name + ": missing parameter " + key);
    return static_cast<std::uint32_t>(ParseUnsigned(it->second, std::string("--family ") + key));
  };
  FamilyDescriptor d;
  if (name == "squares") {
    d = FamilyDescriptor::Squares(space);
  } else if (name == "full" || name == "full-space") {
    d = FamilyDescriptor::FullSpace(space);
  } else if (name == "sps") {
    d = FamilyDescriptor::Sps(param("k"), space);
  } else if (name == "detproj") {
    d = FamilyDescriptor::DetProjection(param("n"), space);
  } else if (name == "sparse") {
    d = FamilyDescriptor::Sparse(param("s"), space);
  } else {
    throw UsageError("--family: unknown family '" + name + "'");
  }
  d.Validate();
  return d;
}

}  // namespace npl::cli
