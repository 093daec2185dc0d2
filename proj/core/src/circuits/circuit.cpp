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

#include "npl/circuits/circuit.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "npl/error.hpp"

namespace npl {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

}  // namespace

Circuit::Circuit(PrimeField field, std::size_t num_inputs, std::vector<Gate> gates,
                 std::uint32_t output)
    : field_(field), num_inputs_(num_inputs), gates_(std::move(gates)), output_(output) {
  if (gates_.empty()) throw Error(ErrorCode::kParseError, "circuit has no gates");
  if (output_ >= gates_.size()) {
    throw Error(ErrorCode::kParseError, "output gate " + std::to_string(output_) + " out of range");
  }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    auto& g = gates_[i];
    switch (g.op) {
      case GateOp::kInput:
        if (g.value >= num_inputs_) {
          throw Error(ErrorCode::kArityMismatch, "gate " + std::to_string(i) + " reads input " +
                                                     std::to_string(g.value) + " of " +
                                                     std::to_string(num_inputs_));
        }
        break;
      case GateOp::kConst:
        g.value %= field_.modulus();
        break;
      case GateOp::kAdd:
      case GateOp::kMul:
        if (g.lhs >= i || g.rhs >= i) {
          throw Error(ErrorCode::kParseError,
                      "gate " + std::to_string(i) + " references a gate that is not earlier");
        }
        break;
    }
  }
}

std::uint64_t Circuit::FormalDegree() const {
  std::vector<std::uint64_t> deg(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const auto& g = gates_[i];
    switch (g.op) {
      case GateOp::kInput: deg[i] = 1; break;
      case GateOp::kConst: deg[i] = 0; break;
      case GateOp::kAdd: deg[i] = std::max(deg[g.lhs], deg[g.rhs]); break;
      case GateOp::kMul: deg[i] = SaturatingAdd(deg[g.lhs], deg[g.rhs]); break;
    }
  }
  return deg[output_];
}

std::uint64_t Circuit::EvaluateRaw(std::span<const std::uint64_t> point) const {
  std::vector<std::uint64_t> val(output_ + 1);
  for (std::size_t i = 0; i <= output_; ++i) {
    const auto& g = gates_[i];
    switch (g.op) {
      case GateOp::kInput: val[i] = point[g.value]; break;
      case GateOp::kConst: val[i] = g.value; break;
      case GateOp::kAdd: val[i] = field_.Add(val[g.lhs], val[g.rhs]); break;
      case GateOp::kMul: val[i] = field_.Mul(val[g.lhs], val[g.rhs]); break;
    }
  }
  return val[output_];
}

FieldElement Circuit::Evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_inputs_) {
    throw Error(ErrorCode::kArityMismatch, "point of length " + std::to_string(point.size()) +
                                               " for circuit with " + std::to_string(num_inputs_) +
                                               " inputs");
  }
  std::vector<std::uint64_t> raw(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i].modulus() != field_.modulus()) {
      throw Error(ErrorCode::kFieldMismatch, "evaluation point outside F_" +
                                                 std::to_string(field_.modulus()));
    }
    raw[i] = point[i].value();
  }
  return FieldElement::FromCanonical(field_, EvaluateRaw(raw));
}

SparsePoly Circuit::Expand(std::size_t term_cap) const {
  // Drop each intermediate polynomial after its last reader.
  std::vector<std::size_t> last_use(gates_.size(), 0);
  for (std::size_t i = 0; i <= output_; ++i) {
    const auto& g = gates_[i];
    if (g.op == GateOp::kAdd || g.op == GateOp::kMul) {
      last_use[g.lhs] = std::max(last_use[g.lhs], i);
      last_use[g.rhs] = std::max(last_use[g.rhs], i);
    }
  }
  std::vector<std::optional<SparsePoly>> poly(output_ + 1);
  for (std::size_t i = 0; i <= output_; ++i) {
    const auto& g = gates_[i];
    switch (g.op) {
      case GateOp::kInput:
        poly[i] = SparsePoly::Variable(field_, num_inputs_, g.value);
        break;
      case GateOp::kConst:
        poly[i] = SparsePoly::Constant(field_, num_inputs_, 0);
        poly[i]->AddTerm(Monomial(num_inputs_), g.value);
        break;
      case GateOp::kAdd:
        poly[i] = *poly[g.lhs] + *poly[g.rhs];
        break;
      case GateOp::kMul:
        poly[i] = poly[g.lhs]->Multiply(*poly[g.rhs], term_cap);
        break;
    }
    if (poly[i]->num_terms() > term_cap) {
      throw Error(ErrorCode::kTermCapExceeded, "gate " + std::to_string(i) + " expands past " +
                                                   std::to_string(term_cap) + " terms");
    }
    if (g.op == GateOp::kAdd || g.op == GateOp::kMul) {
      if (last_use[g.lhs] == i) poly[g.lhs].reset();
      if (last_use[g.rhs] == i) poly[g.rhs].reset();
    }
  }
  return std::move(*poly[output_]);
}

Circuit Circuit::FromPoly(const SparsePoly& f) {
  CircuitBuilder b(f.field(), f.num_vars());
  Wire acc = b.Constant(0);
  for (const auto& [m, c] : f.terms()) {
    Wire term = b.ConstantRaw(c);
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) term = b.Mul(term, b.Input(i));
    }
    acc = b.Add(acc, term);
  }
  return b.Build(acc);
}

CircuitBuilder::CircuitBuilder(PrimeField field, std::size_t num_inputs)
    : field_(field), num_inputs_(num_inputs), input_gate_(num_inputs, -1) {}

Wire CircuitBuilder::Push(Gate g) {
  gates_.push_back(g);
  return Wire{this, static_cast<std::uint32_t>(gates_.size() - 1)};
}

void CircuitBuilder::Check(Wire w) const {
  if (w.builder != this || w.id >= gates_.size()) {
    throw Error(ErrorCode::kArityMismatch, "wire does not belong to this builder");
  }
}

Wire CircuitBuilder::Input(std::size_t i) {
  if (i >= num_inputs_) {
    throw Error(ErrorCode::kArityMismatch,
                "input " + std::to_string(i) + " of " + std::to_string(num_inputs_));
  }
  if (input_gate_[i] < 0) {
    input_gate_[i] = static_cast<std::int64_t>(Push(Gate::Input(static_cast<std::uint32_t>(i))).id);
  }
  return Wire{this, static_cast<std::uint32_t>(input_gate_[i])};
}

Wire CircuitBuilder::Constant(std::int64_t c) { return ConstantRaw(field_.Reduce(c)); }

Wire CircuitBuilder::ConstantRaw(std::uint64_t c) {
  c %= field_.modulus();
  for (const auto& [value, id] : const_gate_) {
    if (value == c) return Wire{this, id};
  }
  Wire w = Push(Gate::Const(c));
  const_gate_.emplace_back(c, w.id);
  return w;
}

Wire CircuitBuilder::Add(Wire a, Wire b) {
  Check(a);
  Check(b);
  return Push(Gate::Add(a.id, b.id));
}

Wire CircuitBuilder::Mul(Wire a, Wire b) {
  Check(a);
  Check(b);
  return Push(Gate::Mul(a.id, b.id));
}

Wire CircuitBuilder::Neg(Wire a) { return Mul(Constant(-1), a); }

Wire CircuitBuilder::Sub(Wire a, Wire b) { return Add(a, Neg(b)); }

Wire CircuitBuilder::Splice(const Circuit& c, std::span<const Wire> inputs) {
  if (inputs.size() != c.num_inputs()) {
    throw Error(ErrorCode::kArityMismatch, std::to_string(inputs.size()) + " wires for circuit with " +
                                               std::to_string(c.num_inputs()) + " inputs");
  }
  if (!(c.field() == field_)) throw Error(ErrorCode::kFieldMismatch, "spliced circuit field differs");
  std::vector<Wire> map(c.size());
  const auto gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    switch (g.op) {
      case GateOp::kInput: map[i] = inputs[g.value]; Check(map[i]); break;
      case GateOp::kConst: map[i] = ConstantRaw(g.value); break;
      case GateOp::kAdd: map[i] = Add(map[g.lhs], map[g.rhs]); break;
      case GateOp::kMul: map[i] = Mul(map[g.lhs], map[g.rhs]); break;
    }
  }
  return map[c.output()];
}

Circuit CircuitBuilder::Build(Wire output) const {
  Check(output);
  return Circuit(field_, num_inputs_, gates_, output.id);
}

Wire operator+(Wire a, Wire b) { return a.builder->Add(a, b); }
Wire operator-(Wire a, Wire b) { return a.builder->Sub(a, b); }
Wire operator*(Wire a, Wire b) { return a.builder->Mul(a, b); }
Wire operator-(Wire a) { return a.builder->Neg(a); }

}  // namespace npl
