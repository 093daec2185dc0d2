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

#ifndef NPL_CIRCUITS_CIRCUIT_JSON_HPP_
#define NPL_CIRCUITS_CIRCUIT_JSON_HPP_

#include <json.hpp>

#include "npl/circuits/circuit.hpp"
#include "npl/circuits/families.hpp"

namespace npl {

// { "p", "v", "gates": [ {"op": "in", "i": k} | {"op": "const", "c": value}
//                        | {"op": "add"|"mul", "a": gate, "b": gate} ], "out": gate }
nlohmann::json CircuitToJson(const Circuit& c);
Circuit CircuitFromJson(const nlohmann::json& j);

// { "class": "det-projection"|"sps"|"sparse"|"squares"|"full-space",
//   "n", "space": {...}, "top_fan_in", "sparsity" }
nlohmann::json DescriptorToJson(const FamilyDescriptor& d);
FamilyDescriptor DescriptorFromJson(const nlohmann::json& j);

}  // namespace npl

#endif  // NPL_CIRCUITS_CIRCUIT_JSON_HPP_
