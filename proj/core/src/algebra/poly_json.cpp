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

#include "npl/algebra/poly_json.hpp"

#include <string>

#include "npl/error.hpp"

namespace npl {
namespace json_detail {

const nlohmann::json& Require(const nlohmann::json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string(context) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::uint64_t RequireUnsigned(const nlohmann::json& j, const char* key, const char* context) {
  const auto& v = Require(j, key, context);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw Error(ErrorCode::kParseError,
                std::string(context) + ": field '" + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::int64_t RequireInteger(const nlohmann::json& j, const char* key, const char* context) {
  const auto& v = Require(j, key, context);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kParseError, std::string(context) + ": field '" + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace json_detail

using json_detail::Require;
using json_detail::RequireInteger;
using json_detail::RequireUnsigned;

nlohmann::json PolyToJson(const SparsePoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"e", m.exponents()}, {"c", c}});
  }
  return {{"p", f.field().modulus()}, {"v", f.num_vars()}, {"terms", std::move(terms)}};
}

SparsePoly PolyFromJson(const nlohmann::json& j) {
  const PrimeField field(RequireUnsigned(j, "p", "polynomial"));
  const std::size_t v = RequireUnsigned(j, "v", "polynomial");
  const auto& terms = Require(j, "terms", "polynomial");
  if (!terms.is_array()) throw Error(ErrorCode::kParseError, "polynomial: 'terms' must be an array");
  SparsePoly f(field, v);
  for (const auto& t : terms) {
    const auto& e = Require(t, "e", "polynomial term");
    if (!e.is_array() || e.size() != v) {
      throw Error(ErrorCode::kParseError,
                  "polynomial term: 'e' must list " + std::to_string(v) + " exponents");
    }
    Monomial m(v);
    for (std::size_t i = 0; i < v; ++i) {
      if (!e[i].is_number_unsigned()) {
        throw Error(ErrorCode::kParseError, "polynomial term: exponents must be non-negative integers");
      }
      m[i] = e[i].get<std::uint32_t>();
    }
    f.AddTerm(m, field.Reduce(RequireInteger(t, "c", "polynomial term")));
  }
  return f;
}

nlohmann::json SpaceToJson(const PolySpace& s) {
  return {{"v", s.num_vars},
          {"d", s.degree},
          {"mode", s.mode == SpaceMode::kHomogeneous ? "homogeneous" : "at-most"}};
}

PolySpace SpaceFromJson(const nlohmann::json& j) {
  PolySpace s;
  s.num_vars = static_cast<std::uint32_t>(RequireUnsigned(j, "v", "space"));
  s.degree = static_cast<std::uint32_t>(RequireUnsigned(j, "d", "space"));
  const auto& mode = Require(j, "mode", "space");
  if (mode == "homogeneous") {
    s.mode = SpaceMode::kHomogeneous;
  } else if (mode == "at-most") {
    s.mode = SpaceMode::kAtMost;
  } else {
    throw Error(ErrorCode::kParseError, "space: 'mode' must be \"homogeneous\" or \"at-most\"");
  }
  return s;
}

}  // namespace npl
