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

#include "npl/ips/certificate.hpp"

#include <cstdlib>
#include <string>

#include "npl/algebra/poly_json.hpp"
#include "npl/circuits/circuit_json.hpp"
#include "npl/error.hpp"
#include "npl/pit/report_json.hpp"

namespace npl {

using json_detail::Require;
using json_detail::RequireUnsigned;

PolynomialSystem PolynomialSystem::Raw(PrimeField field, std::size_t num_vars, std::vector<Circuit> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!(members[i].field() == field)) {
      throw Error(ErrorCode::kFieldMismatch, "system member " + std::to_string(i) + " is over F_" +
                                                 std::to_string(members[i].field().modulus()));
    }
    if (members[i].num_inputs() != num_vars) {
      throw Error(ErrorCode::kArityMismatch, "system member " + std::to_string(i) + " has " +
                                                 std::to_string(members[i].num_inputs()) + " inputs, expected " +
                                                 std::to_string(num_vars));
    }
  }
  return PolynomialSystem{std::move(field), num_vars, std::move(members), SystemProvenance::kRaw, {}};
}

PolynomialSystem CnfToSystem(const Cnf& cnf, const PrimeField& field) {
  std::vector<Circuit> members;
  std::vector<std::int64_t> clause_map;
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    const auto& clause = cnf.clauses[c];
    if (clause.size() > 3) {
      throw Error(ErrorCode::kClauseTooWide, "clause " + std::to_string(c) + " has " +
                                                 std::to_string(clause.size()) + " literals; at most 3 allowed");
    }
    CircuitBuilder b(field, cnf.num_vars);
    Wire acc = b.Constant(1);
    for (int lit : clause) {
      const std::size_t var = static_cast<std::size_t>(std::abs(lit)) - 1;
      if (var >= cnf.num_vars) {
        throw Error(ErrorCode::kArityMismatch, "clause " + std::to_string(c) + " mentions x" +
                                                   std::to_string(var + 1) + " beyond " +
                                                   std::to_string(cnf.num_vars) + " variables");
      }
      const Wire x = b.Input(var);
      acc = acc * (lit > 0 ? b.Constant(1) - x : x);
    }
    members.push_back(b.Build(acc));
    clause_map.push_back(static_cast<std::int64_t>(c));
  }
  for (std::size_t i = 0; i < cnf.num_vars; ++i) {
    CircuitBuilder b(field, cnf.num_vars);
    const Wire x = b.Input(i);
    members.push_back(b.Build(x * x - x));
    clause_map.push_back(-1);
  }
  return PolynomialSystem{field, cnf.num_vars, std::move(members), SystemProvenance::kCnf, std::move(clause_map)};
}

Circuit ComposeSystem(const PolynomialSystem& sys, const GeometricCertificate& cert) {
  const Circuit& c = cert.circuit;
  if (!(c.field() == sys.field)) {
    throw Error(ErrorCode::kFieldMismatch, "certificate is over F_" + std::to_string(c.field().modulus()) +
                                               ", system over F_" + std::to_string(sys.field.modulus()));
  }
  if (c.num_inputs() != sys.members.size()) {
    throw Error(ErrorCode::kArityMismatch, "certificate has " + std::to_string(c.num_inputs()) +
                                               " inputs but the system has " +
                                               std::to_string(sys.members.size()) + " polynomials");
  }
  CircuitBuilder b(sys.field, sys.num_vars);
  std::vector<Wire> xs;
  for (std::size_t i = 0; i < sys.num_vars; ++i) xs.push_back(b.Input(i));
  std::vector<Wire> fs;
  for (const auto& f : sys.members) fs.push_back(b.Splice(f, xs));
  return b.Build(b.Splice(c, fs));
}

namespace {

std::string PointToString(std::span<const std::uint64_t> point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(point[i]);
  }
  return s + ")";
}

}  // namespace

VerificationReport VerifyCertificate(const PolynomialSystem& sys, const GeometricCertificate& cert,
                                     const PitConfig& pit) {
  const Circuit composed = ComposeSystem(sys, cert);
  VerificationReport r;
  const std::vector<std::uint64_t> origin(cert.circuit.num_inputs(), 0);
  r.value_at_zero = cert.circuit.EvaluateRaw(origin);
  r.condition1 = r.value_at_zero == 1;

  switch (pit.engine) {
    case PitEngine::kAuto:
      r.composed_verdict = PitAuto(BlackBox::FromCircuit(composed), pit.trials, pit.seed,
                                   pit.enumeration_budget, pit.jobs);
      break;
    case PitEngine::kExhaustive:
      r.composed_verdict = PitExhaustive(composed, pit.enumeration_budget);
      break;
    case PitEngine::kSchwartzZippel:
      r.composed_verdict = PitSchwartzZippel(composed, pit.trials, pit.seed, pit.jobs);
      break;
  }
  const PitVerdict& v = *r.composed_verdict;
  r.condition2 = v.outcome() != PitOutcome::kProvenNonzero;
  r.accepted = r.condition1 && r.condition2;
  r.grade = v.outcome() == PitOutcome::kProbablyZero ? "randomized" : "exact";
  r.error_bound = v.ErrorBound();

  if (!r.condition1) {
    r.reason = "condition 1 failed: C(0) = " + std::to_string(r.value_at_zero) + ", expected 1";
  }
  if (!r.condition2) {
    if (!r.reason.empty()) r.reason += "; ";
    r.reason += "condition 2 failed: C(f(x)) = " + std::to_string(v.witness_value()) + " at x = " +
                PointToString(v.witness());
  }
  return r;
}

nlohmann::json SystemToJson(const PolynomialSystem& sys) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& f : sys.members) members.push_back(CircuitToJson(f));
  nlohmann::json j = {{"p", sys.field.modulus()},
                      {"n", sys.num_vars},
                      {"provenance", sys.provenance == SystemProvenance::kCnf ? "cnf" : "raw"},
                      {"members", std::move(members)}};
  if (sys.provenance == SystemProvenance::kCnf) j["clause_map"] = sys.clause_map;
  return j;
}

PolynomialSystem SystemFromJson(const nlohmann::json& j) {
  const PrimeField field(RequireUnsigned(j, "p", "system"));
  const std::size_t n = RequireUnsigned(j, "n", "system");
  const auto& members_json = Require(j, "members", "system");
  if (!members_json.is_array()) throw Error(ErrorCode::kParseError, "system: 'members' must be an array");
  std::vector<Circuit> members;
  for (const auto& m : members_json) members.push_back(CircuitFromJson(m));
  PolynomialSystem sys = PolynomialSystem::Raw(field, n, std::move(members));
  if (j.contains("provenance") && j["provenance"] == "cnf") {
    sys.provenance = SystemProvenance::kCnf;
    if (j.contains("clause_map")) sys.clause_map = j["clause_map"].get<std::vector<std::int64_t>>();
  }
  return sys;
}

nlohmann::json VerificationReportToJson(const VerificationReport& r) {
  nlohmann::json j = {{"verdict", r.accepted ? "accept" : "reject"},
                      {"condition1", {{"passed", r.condition1}, {"value_at_zero", r.value_at_zero}}},
                      {"grade", r.grade},
                      {"error_bound", r.error_bound}};
  nlohmann::json c2 = {{"passed", r.condition2}};
  if (r.composed_verdict) c2["verdict"] = VerdictToJson(*r.composed_verdict);
  j["condition2"] = std::move(c2);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace npl
