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

#ifndef NPL_CIRCUITS_CIRCUIT_HPP_
#define NPL_CIRCUITS_CIRCUIT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "npl/algebra/prime_field.hpp"
#include "npl/algebra/sparse_poly.hpp"

namespace npl {

enum class GateOp : std::uint8_t { kInput, kConst, kAdd, kMul };

struct Gate {
  GateOp op = GateOp::kConst;
  std::uint32_t lhs = 0;    // add/mul operand
  std::uint32_t rhs = 0;    // add/mul operand
  std::uint64_t value = 0;  // input index, or canonical constant

  static Gate Input(std::uint32_t i) { return {GateOp::kInput, 0, 0, i}; }
  static Gate Const(std::uint64_t c) { return {GateOp::kConst, 0, 0, c}; }
  static Gate Add(std::uint32_t a, std::uint32_t b) { return {GateOp::kAdd, a, b, 0}; }
  static Gate Mul(std::uint32_t a, std::uint32_t b) { return {GateOp::kMul, a, b, 0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Straight-line algebraic circuit over F_p: gates in topological order,
/// every operand index strictly smaller than the gate's own index.
class Circuit {
 public:
  /// Validates acyclicity, operand ranges, input indices and the output.
  Circuit(PrimeField field, std::size_t num_inputs, std::vector<Gate> gates, std::uint32_t output);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::uint32_t output() const noexcept { return output_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Bottom-up bound: input 1, const 0, add max, mul sum (saturating).
  std::uint64_t FormalDegree() const;

  FieldElement Evaluate(std::span<const FieldElement> point) const;
  /// Residue-level evaluation for hot loops; point entries must be canonical.
  std::uint64_t EvaluateRaw(std::span<const std::uint64_t> point) const;

  /// The polynomial computed at the output gate.
  SparsePoly Expand(std::size_t term_cap = kDefaultTermCap) const;

  /// Sum-of-monomials circuit computing f.
  static Circuit FromPoly(const SparsePoly& f);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  PrimeField field_;
  std::size_t num_inputs_;
  std::vector<Gate> gates_;
  std::uint32_t output_;
};

class CircuitBuilder;

/// Handle to a gate under construction. Arithmetic on wires appends gates
/// to the owning builder.
struct Wire {
  CircuitBuilder* builder = nullptr;
  std::uint32_t id = 0;
};

Wire operator+(Wire a, Wire b);
Wire operator-(Wire a, Wire b);
Wire operator*(Wire a, Wire b);
Wire operator-(Wire a);

class CircuitBuilder {
 public:
  CircuitBuilder(PrimeField field, std::size_t num_inputs);
  CircuitBuilder(const CircuitBuilder&) = delete;
  CircuitBuilder& operator=(const CircuitBuilder&) = delete;

  const PrimeField& field() const noexcept { return field_; }
  std::size_t num_inputs() const noexcept { return num_inputs_; }

  /// Input and constant gates are shared: asking twice returns one gate.
  Wire Input(std::size_t i);
  Wire Constant(std::int64_t c);
  Wire ConstantRaw(std::uint64_t c);
  Wire Add(Wire a, Wire b);
  Wire Mul(Wire a, Wire b);
  Wire Sub(Wire a, Wire b);
  Wire Neg(Wire a);

  /// Copies every gate of c, mapping its inputs to the given wires, and
  /// returns the wire of c's output.
  Wire Splice(const Circuit& c, std::span<const Wire> inputs);

  std::size_t size() const noexcept { return gates_.size(); }
  Circuit Build(Wire output) const;

 private:
  Wire Push(Gate g);
  void Check(Wire w) const;

  PrimeField field_;
  std::size_t num_inputs_;
  std::vector<Gate> gates_;
  std::vector<std::int64_t> input_gate_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> const_gate_;
};

}  // namespace npl

#endif  // NPL_CIRCUITS_CIRCUIT_HPP_
