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

#include "npl/cli/execute.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "npl/algebra/poly_json.hpp"
#include "npl/circuits/circuit_json.hpp"
#include "npl/error.hpp"
#include "npl/ips/certificate.hpp"
#include "npl/ips/cnf.hpp"
#include "npl/meta/coeff_matrix.hpp"
#include "npl/meta/meta_polynomial.hpp"
#include "npl/meta/rank.hpp"
#include "npl/pit/generator.hpp"
#include "npl/pit/hitting.hpp"
#include "npl/pit/report_json.hpp"

namespace npl::cli {

namespace {

constexpr const char* kUsage =
    "usage: npl <pit|hit-check|audit|rank|gen|ips-verify|ips-from-cnf> [flags]\n"
    "  --field P --seed S --trials T --exhaustive --engine auto|exhaustive|sz\n"
    "  --term-cap C --enum-budget B --jobs J --out FILE --pretty\n"
    "  --circuit FILE --meta SPEC --family SPEC --space V:D|V:<=D --hard POLY --poly POLY\n"
    "  --k K --shift L --matrix --n N --cnf FILE --system FILE --cert FILE\n";

std::string ReadFile(const std::string& path, const char* flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, std::string(flag) + ": cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json ReadJson(const std::string& path, const char* flag) {
  try {
    return nlohmann::json::parse(ReadFile(path, flag));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string(flag) + ": '" + path + "' is not valid JSON: " + e.what());
  }
}

void Require(const std::string& value, const char* flag, const std::string& command) {
  if (value.empty()) throw UsageError(command + " requires " + flag);
}

void CheckField(const PrimeField& got, const PrimeField& want, const char* flag) {
  if (!(got == want)) {
    throw Error(ErrorCode::kFieldMismatch, std::string(flag) + ": input is over F_" + std::to_string(got.modulus()) +
                                               " but --field is " + std::to_string(want.modulus()));
  }
}

std::map<std::string, std::uint64_t> KeyValues(const std::string& text, const char* flag) {
  std::map<std::string, std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError(std::string(flag) + ": expected key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      out[item.substr(0, eq)] = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + ": bad number in '" + item + "'");
    }
  }
  return out;
}

std::uint64_t Param(const std::map<std::string, std::uint64_t>& kv, const char* key, const std::string& spec) {
  auto it = kv.find(key);
  if (it == kv.end()) throw UsageError("--meta " + spec + ": missing " + key);
  return it->second;
}

/// Space from --space, or fallback when the flag is absent.
PolySpace ResolveSpace(const ExperimentPlan& plan, std::optional<PolySpace> fallback, const std::string& why) {
  if (!plan.space.empty()) return ParseSpace(plan.space);
  if (fallback) return *fallback;
  throw UsageError(plan.command + " requires --space (" + why + ")");
}

MetaPolynomial ResolveMeta(const ExperimentPlan& plan, const PolySpace& space, const PrimeField& field) {
  const std::string& spec = plan.meta;
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (spec == "disc") {
    MetaPolynomial t = MetaPolynomial::Discriminant(field);
    if (!(t.space() == space)) {
      throw Error(ErrorCode::kSpaceMismatch, "--meta disc lives on Poly^2(2), not " + space.ToString());
    }
    return t;
  }
  if (spec == "zero") return MetaPolynomial::Zero(field, space);
  if (name == "partials-minor" || name == "shifted-minor") {
    const auto kv = KeyValues(rest, "--meta");
    RankMethodSpec rs;
    rs.method = name == "partials-minor" ? RankMethod::kPartials : RankMethod::kShifted;
    rs.k = static_cast<std::uint32_t>(Param(kv, "k", spec));
    rs.shift = rs.method == RankMethod::kShifted ? static_cast<std::uint32_t>(Param(kv, "l", spec)) : 0;
    rs.size = static_cast<std::uint32_t>(Param(kv, "r", spec)) + 1;
    return MinorMeta(rs, space, field);
  }
  if (name == "coord") {
    return MetaPolynomial::Coordinate(field, space, KeyValues("i=" + rest, "--meta").at("i"));
  }
  const Circuit c = CircuitFromJson(ReadJson(spec, "--meta"));
  CheckField(c.field(), field, "--meta");
  if (c.num_inputs() != MonomialIndex(space).Dimension()) {
    throw Error(ErrorCode::kArityMismatch, "--meta: circuit has " + std::to_string(c.num_inputs()) +
                                               " inputs, " + space.ToString() + " has dimension " +
                                               std::to_string(MonomialIndex(space).Dimension()));
  }
  return MetaPolynomial::FromCircuit(c, space, spec);
}

/// A polynomial from a JSON file or "cv:c0,c1,..." in the basis of space.
SparsePoly ResolvePoly(const std::string& text, const std::optional<PolySpace>& space, const PrimeField& field,
                       const char* flag) {
  if (text.rfind("cv:", 0) == 0) {
    if (!space) throw UsageError(std::string(flag) + " cv:... requires --space");
    const MonomialIndex index(*space);
    std::vector<FieldElement> cv;
    std::stringstream ss(text.substr(3));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        cv.emplace_back(field, std::stoll(item));
      } catch (const std::logic_error&) {
        throw UsageError(std::string(flag) + ": bad coefficient '" + item + "'");
      }
    }
    if (cv.size() != index.Dimension()) {
      throw Error(ErrorCode::kArityMismatch, std::string(flag) + ": " + std::to_string(cv.size()) +
                                                 " coefficients, " + space->ToString() + " has dimension " +
                                                 std::to_string(index.Dimension()));
    }
    return FromCoeffVector(cv, index, field);
  }
  SparsePoly f = PolyFromJson(ReadJson(text, flag));
  CheckField(f.field(), field, flag);
  return f;
}

PitVerdict RunEngine(const ExperimentPlan& plan, const Circuit& c) {
  if (plan.engine == "exhaustive") return PitExhaustive(c, plan.enumeration_budget);
  if (plan.engine == "sz") return PitSchwartzZippel(c, plan.trials, plan.seed, plan.jobs);
  return PitAuto(BlackBox::FromCircuit(c), plan.trials, plan.seed, plan.enumeration_budget, plan.jobs);
}

HitBudget BudgetOf(const ExperimentPlan& plan) {
  return HitBudget{plan.exhaustive, plan.trials, plan.enumeration_budget};
}

ExecutionResult RunPit(const ExperimentPlan& plan, const PrimeField& field) {
  Require(plan.circuit, "--circuit", plan.command);
  const Circuit c = CircuitFromJson(ReadJson(plan.circuit, "--circuit"));
  CheckField(c.field(), field, "--circuit");
  const PitVerdict v = RunEngine(plan, c);
  return {v.outcome() == PitOutcome::kProvenNonzero ? 1 : 0,
          {{"num_inputs", c.num_inputs()}, {"formal_degree", c.FormalDegree()}, {"verdict", VerdictToJson(v)}}};
}

ExecutionResult RunHitCheck(const ExperimentPlan& plan, const PrimeField& field) {
  Require(plan.meta, "--meta", plan.command);
  Require(plan.family, "--family", plan.command);
  const std::optional<PolySpace> fallback =
      plan.meta == "disc" ? std::optional(PolySpace::Homogeneous(2, 2)) : std::nullopt;
  const PolySpace space = ResolveSpace(plan, fallback, "the coefficient space of T");
  const MetaPolynomial t = ResolveMeta(plan, space, field);
  const FamilyDescriptor desc = ParseFamily(plan.family, space);
  const HitReport r = SuccinctHittingCheck(desc, t, BudgetOf(plan), plan.seed, plan.jobs);
  return {r.outcome == HitReport::Outcome::kWitness ? 1 : 0, {{"hit", HitReportToJson(r)}}};
}

ExecutionResult RunAudit(const ExperimentPlan& plan, const PrimeField& field) {
  Require(plan.meta, "--meta", plan.command);
  Require(plan.family, "--family", plan.command);
  Require(plan.hard, "--hard", plan.command);
  const std::optional<PolySpace> fallback =
      plan.meta == "disc" ? std::optional(PolySpace::Homogeneous(2, 2)) : std::nullopt;
  const PolySpace space = ResolveSpace(plan, fallback, "the coefficient space of T");
  const MetaPolynomial t = ResolveMeta(plan, space, field);
  const FamilyDescriptor desc = ParseFamily(plan.family, space);
  const SparsePoly hard = ResolvePoly(plan.hard, space, field, "--hard");
  const AuditReport r = NaturalProofAudit(t, desc, hard, BudgetOf(plan), plan.seed);
  return {r.classification == AuditClass::kRefuted ? 1 : 0, {{"audit", AuditReportToJson(r)}}};
}

ExecutionResult RunRank(const ExperimentPlan& plan, const PrimeField& field) {
  Require(plan.poly, "--poly", plan.command);
  const std::optional<PolySpace> space =
      plan.space.empty() ? std::nullopt : std::optional(ParseSpace(plan.space));
  const SparsePoly f = ResolvePoly(plan.poly, space, field, "--poly");
  std::uint32_t degree = 0;
  if (space) {
    if (!FitsSpace(f, *space)) {
      throw Error(ErrorCode::kSpaceMismatch, "--poly does not lie in " + space->ToString());
    }
    degree = space->degree;
  } else {
    if (!f.IsHomogeneous()) throw UsageError("rank of a non-homogeneous --poly requires --space");
    degree = static_cast<std::uint32_t>(std::max<std::int64_t>(f.degree(), 0));
  }
  const CoeffMatrix m = plan.shift == 0 ? PartialsMatrix(f, degree, plan.k)
                                        : ShiftedPartialsMatrix(f, degree, plan.k, plan.shift);
  nlohmann::json results = {{"k", plan.k},           {"shift", plan.shift}, {"degree", degree},
                            {"rows", m.rows()},      {"cols", m.cols()},    {"rank", RankModP(m)},
                            {"poly", PolyToJson(f)}};
  if (plan.matrix) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows.push_back(std::vector<std::uint64_t>(m.entries.begin() + static_cast<std::ptrdiff_t>(r * m.cols()),
                                                m.entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols())));
    }
    results["matrix"] = std::move(rows);
  }
  return {0, std::move(results)};
}

ExecutionResult RunGen(const ExperimentPlan& plan, const PrimeField& field) {
  const Generator g = DetCoeffGenerator(plan.n, field, plan.term_cap);
  nlohmann::json results = {{"n", plan.n},
                            {"seed_length", g.seed_length()},
                            {"dimension", g.dimension()},
                            {"target", SpaceToJson(g.target())},
                            {"coordinate_degree", g.coordinate_degree()}};
  if (plan.meta.empty()) return {0, std::move(results)};
  const PolySpace space = ResolveSpace(plan, g.target(), "the generator target");
  const MetaPolynomial t = ResolveMeta(plan, space, field);
  const PitVerdict v = GeneratorPit(t, g, plan.trials, plan.seed, plan.jobs);
  results["meta"] = t.id();
  results["verdict"] = VerdictToJson(v);
  return {v.outcome() == PitOutcome::kProvenNonzero ? 1 : 0, std::move(results)};
}

PolynomialSystem LoadSystem(const ExperimentPlan& plan, const PrimeField& field) {
  if (!plan.cnf.empty() && !plan.system.empty()) throw UsageError("give either --cnf or --system, not both");
  if (!plan.cnf.empty()) return CnfToSystem(ParseDimacsString(ReadFile(plan.cnf, "--cnf")), field);
  Require(plan.system, "--cnf or --system", plan.command);
  PolynomialSystem sys = SystemFromJson(ReadJson(plan.system, "--system"));
  CheckField(sys.field, field, "--system");
  return sys;
}

ExecutionResult RunIpsVerify(const ExperimentPlan& plan, const PrimeField& field) {
  Require(plan.cert, "--cert", plan.command);
  const PolynomialSystem sys = LoadSystem(plan, field);
  const Circuit c = CircuitFromJson(ReadJson(plan.cert, "--cert"));
  CheckField(c.field(), field, "--cert");
  PitConfig cfg;
  cfg.engine = plan.engine == "exhaustive" ? PitEngine::kExhaustive
               : plan.engine == "sz"       ? PitEngine::kSchwartzZippel
                                           : PitEngine::kAuto;
  cfg.trials = plan.trials;
  cfg.seed = plan.seed;
  cfg.enumeration_budget = plan.enumeration_budget;
  cfg.jobs = plan.jobs;
  const VerificationReport r = VerifyCertificate(sys, GeometricCertificate{c}, cfg);
  nlohmann::json results = VerificationReportToJson(r);
  results["system_size"] = sys.members.size();
  results["num_vars"] = sys.num_vars;
  return {r.accepted ? 0 : 1, std::move(results)};
}

ExecutionResult RunIpsFromCnf(const ExperimentPlan& plan, const PrimeField& field) {
  Require(plan.cnf, "--cnf", plan.command);
  const Cnf cnf = ParseDimacsString(ReadFile(plan.cnf, "--cnf"));
  return {0, {{"clause_map", "clause i -> prod over literals of (1 - x) for x, x for NOT x; then x^2 - x"},
              {"system", SystemToJson(CnfToSystem(cnf, field))}}};
}

}  // namespace

ExecutionResult ExecutePlan(const ExperimentPlan& plan) {
  const PrimeField field(plan.field);
  if (plan.command == "pit") return RunPit(plan, field);
  if (plan.command == "hit-check") return RunHitCheck(plan, field);
  if (plan.command == "audit") return RunAudit(plan, field);
  if (plan.command == "rank") return RunRank(plan, field);
  if (plan.command == "gen") return RunGen(plan, field);
  if (plan.command == "ips-verify") return RunIpsVerify(plan, field);
  if (plan.command == "ips-from-cnf") return RunIpsFromCnf(plan, field);
  throw UsageError("unknown command '" + plan.command + "'");
}

nlohmann::json ReportBody(const ExperimentPlan& plan, const nlohmann::json& results) {
  return {{"plan", PlanToJson(plan)}, {"results", results}};
}

CliOutput RunCli(const std::vector<std::string>& args, const std::map<std::string, std::string>& env) {
  CliOutput out;
  for (const auto& a : args) {
    if (a == "--help" || a == "-h") {
      out.out = kUsage;
      return out;
    }
  }
  ExperimentPlan plan;
  try {
    plan = ParsePlan(args, env);
  } catch (const UsageError& e) {
    out.exit_code = 2;
    out.err = std::string("npl: usage error: ") + e.what() + "\n" + kUsage;
    return out;
  }

  const auto start = std::chrono::steady_clock::now();
  nlohmann::json report;
  try {
    ExecutionResult r = ExecutePlan(plan);
    out.exit_code = r.exit_code;
    report = ReportBody(plan, r.results);
  } catch (const UsageError& e) {
    out.exit_code = 2;
    out.err = std::string("npl: usage error: ") + e.what() + "\n";
    report = ReportBody(plan, {{"error", {{"code", "usage"}, {"message", e.what()}}}});
  } catch (const Error& e) {
    out.exit_code = 2;
    out.err = std::string("npl: error: ") + e.what() + "\n";
    report = ReportBody(plan, {{"error", {{"code", ToString(e.code())}, {"message", e.what()}}}});
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.err = std::string("npl: internal error: ") + e.what() + "\n";
    report = ReportBody(plan, {{"error", {{"code", "internal"}, {"message", e.what()}}}});
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report["header"] = {{"tool", "npl"}, {"tool_version", kToolVersion}, {"wall_clock_ms", elapsed.count()}};

  std::string text = report.dump(plan.pretty ? 2 : -1) + "\n";
  if (plan.out.empty()) {
    out.out = std::move(text);
  } else {
    std::ofstream f(plan.out, std::ios::binary);
    if (!f || !(f << text)) {
      out.exit_code = 2;
      out.err += "npl: error: --out: cannot write '" + plan.out + "'\n";
    }
  }
  return out;
}

}  // namespace npl::cli
