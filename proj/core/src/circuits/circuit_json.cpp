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

#include "npl/circuits/circuit_json.hpp"

#include <string>

#include "npl/algebra/poly_json.hpp"
#include "npl/error.hpp"

namespace npl {

using json_detail::Require;
using json_detail::RequireInteger;
using json_detail::RequireUnsigned;

nlohmann::json CircuitToJson(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    switch (g.op) {
      case GateOp::kInput: gates.push_back({{"op", "in"}, {"i", g.value}}); break;
      case GateOp::kConst: gates.push_back({{"op", "const"}, {"c", g.value}}); break;
      case GateOp::kAdd: gates.push_back({{"op", "add"}, {"a", g.lhs}, {"b", g.rhs}}); break;
      case GateOp::kMul: gates.push_back({{"op", "mul"}, {"a", g.lhs}, {"b", g.rhs}}); break;
    }
  }
  return {{"p", c.field().modulus()}, {"v", c.num_inputs()}, {"gates", std::move(gates)},
          {"out", c.output()}};
}

Circuit CircuitFromJson(const nlohmann::json& j) {
  const PrimeField field(RequireUnsigned(j, "p", "circuit"));
  const std::size_t v = RequireUnsigned(j, "v", "circuit");
  const auto& gates_json = Require(j, "gates", "circuit");
  if (!gates_json.is_array()) throw Error(ErrorCode::kParseError, "circuit: 'gates' must be an array");
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < gates_json.size(); ++i) {
    const auto& g = gates_json[i];
    const std::string context = "circuit gate " + std::to_string(i);
    const auto& op = Require(g, "op", context.c_str());
    if (op == "in") {
      gates.push_back(Gate::Input(static_cast<std::uint32_t>(RequireUnsigned(g, "i", context.c_str()))));
    } else if (op == "const") {
      gates.push_back(Gate::Const(field.Reduce(RequireInteger(g, "c", context.c_str()))));
    } else if (op == "add" || op == "mul") {
      const auto a = static_cast<std::uint32_t>(RequireUnsigned(g, "a", context.c_str()));
      const auto b = static_cast<std::uint32_t>(RequireUnsigned(g, "b", context.c_str()));
      gates.push_back(op == "add" ? Gate::Add(a, b) : Gate::Mul(a, b));
    } else {
      throw Error(ErrorCode::kParseError, context + ": unknown op " + op.dump());
    }
  }
  return Circuit(field, v, std::move(gates), static_cast<std::uint32_t>(RequireUnsigned(j, "out", "circuit")));
}

nlohmann::json DescriptorToJson(const FamilyDescriptor& d) {
  return {{"class", ToString(d.class_id)},
          {"n", d.n},
          {"space", SpaceToJson(d.space)},
          {"top_fan_in", d.top_fan_in},
          {"sparsity", d.sparsity}};
}

FamilyDescriptor DescriptorFromJson(const nlohmann::json& j) {
  FamilyDescriptor d;
  const auto& cls = Require(j, "class", "descriptor");
  if (!cls.is_string()) throw Error(ErrorCode::kParseError, "descriptor: 'class' must be a string");
  d.class_id = FamilyClassFromString(cls.get<std::string>());
  d.space = SpaceFromJson(Require(j, "space", "descriptor"));
  if (j.contains("n")) d.n = static_cast<std::uint32_t>(RequireUnsigned(j, "n", "descriptor"));
  if (j.contains("top_fan_in")) {
    d.top_fan_in = static_cast<std::uint32_t>(RequireUnsigned(j, "top_fan_in", "descriptor"));
  }
  if (j.contains("sparsity")) {
    d.sparsity = static_cast<std::uint32_t>(RequireUnsigned(j, "sparsity", "descriptor"));
  }
  d.Validate();
  return d;
}

}  // namespace npl
