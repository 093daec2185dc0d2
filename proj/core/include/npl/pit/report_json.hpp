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

#ifndef NPL_PIT_REPORT_JSON_HPP_
#define NPL_PIT_REPORT_JSON_HPP_

#include <json.hpp>

#include "npl/pit/engines.hpp"
#include "npl/pit/hitting.hpp"

namespace npl {

nlohmann::json VerdictToJson(const PitVerdict& v);
nlohmann::json HitBudgetToJson(const HitBudget& b);
nlohmann::json HitReportToJson(const HitReport& r);
nlohmann::json AuditReportToJson(const AuditReport& r);
nlohmann::json EquivalenceReportToJson(const EquivalenceReport& r);

}  // namespace npl

#endif  // NPL_PIT_REPORT_JSON_HPP_
