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

#include "npl/pit/report_json.hpp"

#include <vector>

#include "npl/algebra/poly_json.hpp"
#include "npl/circuits/circuit_json.hpp"

namespace npl {

nlohmann::json VerdictToJson(const PitVerdict& v) {
  nlohmann::json j = {{"outcome", ToString(v.outcome())},
                      {"engine", v.engine()},
                      {"trials", v.trials()},
                      {"degree_bound", v.degree_bound()},
                      {"modulus", v.modulus()},
                      {"per_trial_error_bound", v.PerTrialErrorBound()},
                      {"error_bound", v.ErrorBound()},
                      {"bound_degraded", v.bound_degraded()}};
  if (v.outcome() == PitOutcome::kProvenNonzero) {
    j["witness"] = std::vector<std::uint64_t>(v.witness().begin(), v.witness().end());
    j["witness_value"] = v.witness_value();
  }
  return j;
}

nlohmann::json HitBudgetToJson(const HitBudget& b) {
  return {{"exhaustive", b.exhaustive}, {"trials", b.trials}, {"enumeration_budget", b.enumeration_budget}};
}

nlohmann::json HitReportToJson(const HitReport& r) {
  nlohmann::json j = {{"meta", r.meta_id},
                      {"family", DescriptorToJson(r.family)},
                      {"modulus", r.modulus},
                      {"budget", HitBudgetToJson(r.budget)},
                      {"seed", r.seed},
                      {"outcome", r.outcome == HitReport::Outcome::kWitness ? "witness" : "none-found"},
                      {"proof", r.IsProof()},
                      {"members_examined", r.members_examined},
                      {"t_degenerate", r.t_degenerate}};
  if (r.witness) {
    j["witness"] = PolyToJson(*r.witness);
    j["witness_value"] = r.witness_value;
  }
  if (r.witness_trial) j["witness_trial"] = *r.witness_trial;
  return j;
}

nlohmann::json AuditReportToJson(const AuditReport& r) {
  nlohmann::json j = {{"meta", r.meta_id},
                      {"easy", DescriptorToJson(r.easy)},
                      {"modulus", r.modulus},
                      {"budget", HitBudgetToJson(r.budget)},
                      {"seed", r.seed},
                      {"members_examined", r.members_examined},
                      {"members_vanishing", r.members_vanishing},
                      {"vanishing_fraction", r.VanishingFraction()},
                      {"hard", PolyToJson(r.hard)},
                      {"hard_value", r.hard_value},
                      {"t_degenerate", r.t_degenerate},
                      {"classification", ToString(r.classification)}};
  if (r.easy_witness) {
    j["easy_witness"] = PolyToJson(*r.easy_witness);
    j["easy_witness_value"] = r.easy_witness_value;
  }
  return j;
}

nlohmann::json EquivalenceReportToJson(const EquivalenceReport& r) {
  return {{"unhit_nonzero", r.unhit_nonzero},
          {"vanishing_useful", r.vanishing_useful},
          {"family_is_hitting_set", r.family_is_hitting_set},
          {"natural_property_exists", r.natural_property_exists},
          {"coincide", r.Coincide()}};
}

}  // namespace npl
