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

#ifndef NPL_IPS_CERTIFICATE_HPP_
#define NPL_IPS_CERTIFICATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "npl/circuits/circuit.hpp"
#include "npl/ips/cnf.hpp"
#include "npl/pit/engines.hpp"

namespace npl {

enum class SystemProvenance { kRaw, kCnf };

/// f_1 = ... = f_m = 0 over x_1..x_n.
struct PolynomialSystem {
  PrimeField field;
  std::size_t num_vars = 0;
  std::vector<Circuit> members;
  SystemProvenance provenance = SystemProvenance::kRaw;
  /// CNF systems: clause index for each member, -1 for Boolean axioms.
  std::vector<std::int64_t> clause_map;

  /// Throws Error(kArityMismatch)/Error(kFieldMismatch) on inconsistent members.
  static PolynomialSystem Raw(PrimeField field, std::size_t num_vars, std::vector<Circuit> members);
};

/// One polynomial per clause, the product over its literals of (1 - x_i)
/// for x_i and x_i for NOT x_i, so a Boolean point satisfies the clause
/// iff the polynomial vanishes there; then the axioms x_i^2 - x_i.
/// An empty clause becomes the constant 1.
/// Throws Error(kClauseTooWide) for clauses with more than three literals.
PolynomialSystem CnfToSystem(const Cnf& cnf, const PrimeField& field);

/// C(y_1..y_m): a candidate geometric IPS refutation.
struct GeometricCertificate {
  Circuit circuit;
};

/// Circuit over x computing C(f_1(x), ..., f_m(x)).
/// Throws Error(kArityMismatch) unless C has m inputs.
Circuit ComposeSystem(const PolynomialSystem& sys, const GeometricCertificate& cert);

enum class PitEngine { kAuto, kExhaustive, kSchwartzZippel };

struct PitConfig {
  PitEngine engine = PitEngine::kAuto;
  std::uint64_t trials = 25;
  std::uint64_t seed = 0;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  unsigned jobs = 1;
};

struct VerificationReport {
  bool accepted = false;
  std::uint64_t value_at_zero = 0;  // C(0)
  bool condition1 = false;          // C(0) == 1
  bool condition2 = false;          // C(f(x)) tested identically zero
  std::optional<PitVerdict> composed_verdict;
  /// "exact" when condition 2 was proven, "randomized" when SZ said ProbablyZero.
  std::string grade;
  double error_bound = 0.0;
  /// Empty on acceptance; otherwise names the failed condition(s).
  std::string reason;
};

/// Accepts iff C(0) = 1 and C(f_1, ..., f_m) passes the configured PIT.
VerificationReport VerifyCertificate(const PolynomialSystem& sys, const GeometricCertificate& cert,
                                     const PitConfig& pit = {});

// { "p", "n", "provenance": "raw"|"cnf", "members": [circuit...], "clause_map"? }
nlohmann::json SystemToJson(const PolynomialSystem& sys);
PolynomialSystem SystemFromJson(const nlohmann::json& j);
nlohmann::json VerificationReportToJson(const VerificationReport& r);

}  // namespace npl

#endif  // NPL_IPS_CERTIFICATE_HPP_
