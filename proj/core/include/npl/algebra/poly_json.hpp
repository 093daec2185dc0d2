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

#ifndef NPL_ALGEBRA_POLY_JSON_HPP_
#define NPL_ALGEBRA_POLY_JSON_HPP_

#include <json.hpp>

#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/sparse_poly.hpp"

namespace npl {

// { "p": modulus, "v": var-count, "terms": [ { "e": [exponents], "c": coefficient } ] }
// Coefficients are written canonically; any integer is accepted on read.
nlohmann::json PolyToJson(const SparsePoly& f);
SparsePoly PolyFromJson(const nlohmann::json& j);

// { "v": .., "d": .., "mode": "homogeneous" | "at-most" }
nlohmann::json SpaceToJson(const PolySpace& s);
PolySpace SpaceFromJson(const nlohmann::json& j);

namespace json_detail {

/// Fetches a required member, throwing Error(kParseError) naming the key.
const nlohmann::json& Require(const nlohmann::json& j, const char* key, const char* context);
std::uint64_t RequireUnsigned(const nlohmann::json& j, const char* key, const char* context);
std::int64_t RequireInteger(const nlohmann::json& j, const char* key, const char* context);

}  // namespace json_detail
}  // namespace npl

#endif  // NPL_ALGEBRA_POLY_JSON_HPP_
