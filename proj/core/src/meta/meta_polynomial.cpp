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

#include "npl/meta/meta_polynomial.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

#include "npl/algebra/poly_json.hpp"
#include "npl/algebra/random.hpp"
#include "npl/circuits/berkowitz.hpp"
#include "npl/circuits/determinant.hpp"
#include "npl/error.hpp"
#include "npl/meta/rank.hpp"

namespace npl {
namespace {

std::string MinorId(const RankMethodSpec& spec) {
  std::string id = spec.method == RankMethod::kPartials ? "partials-minor:k=" : "shifted-minor:k=";
  id += std::to_string(spec.k);
  if (spec.method == RankMethod::kShifted) id += ",shift=" + std::to_string(spec.shift);
  id += ",r=" + std::to_string(spec.size - 1);
  switch (spec.selection) {
    case MinorSelection::kLeading: break;
    case MinorSelection::kExplicit: {
      auto list = [](const std::vector<std::uint32_t>& v) {
        std::string s;
        for (auto i : v) s += (s.empty() ? "" : "/") + std::to_string(i);
        return s;
      };
      id += ",rows=" + list(spec.rows) + ",cols=" + list(spec.cols);
      break;
    }
    case MinorSelection::kRandom: id += ",select=random,seed=" + std::to_string(spec.seed); break;
  }
  return id;
}

std::vector<std::uint32_t> ResolveSelection(const RankMethodSpec& spec,
                                            const std::vector<std::uint32_t>& explicit_choice,
                                            std::uint64_t extent, Rng& rng, const char* axis) {
  std::vector<std::uint32_t> out;
  switch (spec.selection) {
    case MinorSelection::kLeading:
      for (std::uint32_t i = 0; i < spec.size; ++i) out.push_back(i);
      break;
    case MinorSelection::kExplicit: {
      if (explicit_choice.size() != spec.size) {
        throw Error(ErrorCode::kMinorOutOfRange, std::string("explicit ") + axis + " list has " +
                                                     std::to_string(explicit_choice.size()) +
                                                     " entries, minor size " + std::to_string(spec.size));
      }
      std::set<std::uint32_t> seen;
      for (auto i : explicit_choice) {
        if (i >= extent) {
          throw Error(ErrorCode::kMinorOutOfRange, std::string(axis) + " " + std::to_string(i) +
                                                       " outside matrix extent " + std::to_string(extent));
        }
        if (!seen.insert(i).second) {
          throw Error(ErrorCode::kMinorOutOfRange, std::string("repeated ") + axis + " " + std::to_string(i));
        }
      }
      out = explicit_choice;
      break;
    }
    case MinorSelection::kRandom: {
      std::set<std::uint32_t> chosen;
      while (chosen.size() < spec.size) chosen.insert(static_cast<std::uint32_t>(rng.Below(extent)));
      out.assign(chosen.begin(), chosen.end());
      break;
    }
  }
  return out;
}

std::string SelectionName(MinorSelection s) {
  switch (s) {
    case MinorSelection::kLeading: return "leading";
    case MinorSelection::kExplicit: return "explicit";
    case MinorSelection::kRandom: return "random";
  }
  return "leading";
}

}  // namespace

nlohmann::json RankSpecToJson(const RankMethodSpec& spec) {
  nlohmann::json minor = {{"kind", SelectionName(spec.selection)}, {"size", spec.size}};
  if (spec.selection == MinorSelection::kExplicit) {
    minor["rows"] = spec.rows;
    minor["cols"] = spec.cols;
  }
  if (spec.selection == MinorSelection::kRandom) minor["seed"] = spec.seed;
  return {{"method", spec.method == RankMethod::kPartials ? "partials" : "shifted"},
          {"k", spec.k},
          {"shift", spec.shift},
          {"minor", std::move(minor)}};
}

RankMethodSpec RankSpecFromJson(const nlohmann::json& j) {
  using json_detail::Require;
  using json_detail::RequireUnsigned;
  RankMethodSpec spec;
  const auto& method = Require(j, "method", "rank spec");
  if (method == "partials") {
    spec.method = RankMethod::kPartials;
  } else if (method == "shifted") {
    spec.method = RankMethod::kShifted;
  } else {
    throw Error(ErrorCode::kParseError, "rank spec: 'method' must be \"partials\" or \"shifted\"");
  }
  spec.k = static_cast<std::uint32_t>(RequireUnsigned(j, "k", "rank spec"));
  spec.shift = j.contains("shift") ? static_cast<std::uint32_t>(RequireUnsigned(j, "shift", "rank spec")) : 0;
  const auto& minor = Require(j, "minor", "rank spec");
  const auto& kind = Require(minor, "kind", "rank spec minor");
  spec.size = static_cast<std::uint32_t>(RequireUnsigned(minor, "size", "rank spec minor"));
  if (kind == "leading") {
    spec.selection = MinorSelection::kLeading;
  } else if (kind == "explicit") {
    spec.selection = MinorSelection::kExplicit;
    try {
      spec.rows = Require(minor, "rows", "rank spec minor").get<std::vector<std::uint32_t>>();
      spec.cols = Require(minor, "cols", "rank spec minor").get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::kParseError, "rank spec minor: 'rows'/'cols' must be index arrays");
    }
  } else if (kind == "random") {
    spec.selection = MinorSelection::kRandom;
    spec.seed = RequireUnsigned(minor, "seed", "rank spec minor");
  } else {
    throw Error(ErrorCode::kParseError, "rank spec minor: unknown kind " + kind.dump());
  }
  return spec;
}

MetaPolynomial::MetaPolynomial(PrimeField field, PolySpace space, std::string id, Rep rep)
    : field_(field), space_(space), arity_(space.Dimension()), id_(std::move(id)), rep_(std::move(rep)) {}

MetaPolynomial MetaPolynomial::FromCircuit(Circuit c, PolySpace space, std::string id) {
  if (c.num_inputs() != space.Dimension()) {
    throw Error(ErrorCode::kArityMismatch, "meta circuit has " + std::to_string(c.num_inputs()) +
                                               " inputs, space " + space.ToString() + " has dimension " +
                                               std::to_string(space.Dimension()));
  }
  const PrimeField field = c.field();
  return MetaPolynomial(field, space, std::move(id), CircuitRep{std::move(c)});
}

MetaPolynomial MetaPolynomial::Discriminant(const PrimeField& field) {
  return MetaPolynomial(field, PolySpace::Homogeneous(2, 2), "disc", DiscriminantRep{});
}

MetaPolynomial MetaPolynomial::Linear(const PrimeField& field, PolySpace space,
                                      std::span<const FieldElement> weights, std::string id) {
  const std::uint64_t n = space.Dimension();
  if (weights.size() != n) {
    throw Error(ErrorCode::kArityMismatch, std::to_string(weights.size()) + " weights for dimension " +
                                               std::to_string(n));
  }
  CircuitBuilder b(field, n);
  Wire acc = b.Constant(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].modulus() != field.modulus()) throw Error(ErrorCode::kFieldMismatch, "weight field");
    if (!weights[i].IsZero()) acc = acc + b.ConstantRaw(weights[i].value()) * b.Input(i);
  }
  return FromCircuit(b.Build(acc), space, std::move(id));
}

MetaPolynomial MetaPolynomial::Coordinate(const PrimeField& field, PolySpace space, std::uint64_t index) {
  const std::uint64_t n = space.Dimension();
  if (index >= n) {
    throw Error(ErrorCode::kArityMismatch, "coordinate " + std::to_string(index) + " of " + std::to_string(n));
  }
  CircuitBuilder b(field, n);
  return FromCircuit(b.Build(b.Input(index)), space, "coord:" + std::to_string(index));
}

MetaPolynomial MetaPolynomial::Zero(const PrimeField& field, PolySpace space) {
  CircuitBuilder b(field, space.Dimension());
  return FromCircuit(b.Build(b.Constant(0)), space, "zero");
}

std::uint64_t MetaPolynomial::EvaluateRaw(std::span<const std::uint64_t> cv) const {
  return std::visit(
      [&](const auto& rep) -> std::uint64_t {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, CircuitRep>) {
          return rep.circuit.EvaluateRaw(cv);
        } else if constexpr (std::is_same_v<R, DiscriminantRep>) {
          return field_.Sub(field_.Mul(cv[1], cv[1]), field_.Mul(field_.Reduce(4), field_.Mul(cv[0], cv[2])));
        } else {
          const std::size_t s = rep.rows.size();
          std::vector<std::uint64_t> sub(s * s);
          if (rep.symbolic) {
            const auto& forms = *rep.symbolic->symbolic;
            const std::size_t cols = rep.symbolic->cols();
            for (std::size_t i = 0; i < s; ++i) {
              for (std::size_t j = 0; j < s; ++j) {
                std::uint64_t acc = 0;
                for (const auto& [var, coeff] : forms[rep.rows[i] * cols + rep.cols[j]]) {
                  acc = field_.Add(acc, field_.Mul(coeff, cv[var]));
                }
                sub[i * s + j] = acc;
              }
            }
          } else {
            std::vector<FieldElement> elems;
            elems.reserve(cv.size());
            for (auto x : cv) elems.push_back(FieldElement::FromCanonical(field_, x));
            const CoeffMatrix m = RankMatrixFor(rep.spec, space_, elems, rep.dimension_cap);
            for (std::size_t i = 0; i < s; ++i) {
              for (std::size_t j = 0; j < s; ++j) sub[i * s + j] = m.at(rep.rows[i], rep.cols[j]);
            }
          }
          return DeterminantModP(field_, s, std::move(sub));
        }
      },
      rep_);
}

FieldElement MetaPolynomial::Evaluate(std::span<const FieldElement> cv) const {
  if (cv.size() != arity_) {
    throw Error(ErrorCode::kArityMismatch, "coefficient vector of length " + std::to_string(cv.size()) +
                                               " for meta-polynomial " + id_ + " of arity " +
                                               std::to_string(arity_));
  }
  std::vector<std::uint64_t> raw(cv.size());
  for (std::size_t i = 0; i < cv.size(); ++i) {
    if (cv[i].modulus() != field_.modulus()) {
      throw Error(ErrorCode::kFieldMismatch, "coefficient vector outside F_" + std::to_string(field_.modulus()));
    }
    raw[i] = cv[i].value();
  }
  return FieldElement::FromCanonical(field_, EvaluateRaw(raw));
}

std::uint64_t MetaPolynomial::DegreeBound() const {
  return std::visit(
      [](const auto& rep) -> std::uint64_t {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, CircuitRep>) {
          return rep.circuit.FormalDegree();
        } else if constexpr (std::is_same_v<R, DiscriminantRep>) {
          return 2;
        } else {
          return rep.rows.size();
        }
      },
      rep_);
}

std::optional<Circuit> MetaPolynomial::ToCircuit() const {
  return std::visit(
      [&](const auto& rep) -> std::optional<Circuit> {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, CircuitRep>) {
          return rep.circuit;
        } else if constexpr (std::is_same_v<R, DiscriminantRep>) {
          CircuitBuilder b(field_, 3);
          Wire a = b.Input(0), bb = b.Input(1), c = b.Input(2);
          return b.Build(bb * bb - b.Constant(4) * (a * c));
        } else {
          if (!rep.symbolic) return std::nullopt;
          CircuitBuilder b(field_, arity_);
          const auto& forms = *rep.symbolic->symbolic;
          const std::size_t cols = rep.symbolic->cols();
          const std::size_t s = rep.rows.size();
          std::vector<std::vector<Wire>> m(s);
          for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j < s; ++j) {
              const auto& form = forms[rep.rows[i] * cols + rep.cols[j]];
              Wire w = b.Constant(0);
              for (std::size_t t = 0; t < form.size(); ++t) {
                Wire term = b.ConstantRaw(form[t].second) * b.Input(form[t].first);
                w = t == 0 ? term : w + term;
              }
              m[i].push_back(w);
            }
          }
          return b.Build(DeterminantBerkowitz(m, WireRingOps{&b}));
        }
      },
      rep_);
}

MetaPolynomial MinorMeta(const RankMethodSpec& spec_in, const PolySpace& space, const PrimeField& field,
                         std::size_t dimension_cap) {
  RankMethodSpec spec = spec_in;
  if (spec.method == RankMethod::kPartials) spec.shift = 0;
  if (space.mode != SpaceMode::kHomogeneous) {
    throw Error(ErrorCode::kSpaceMismatch, "rank minors need a homogeneous space, got " + space.ToString());
  }
  if (field.modulus() <= space.degree) {
    throw Error(ErrorCode::kCharacteristicTooSmall, "need p > " + std::to_string(space.degree));
  }
  if (spec.k > space.degree) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "order " + std::to_string(spec.k) + " exceeds degree " + std::to_string(space.degree));
  }
  const std::uint64_t v = space.num_vars;
  const std::uint64_t rows = Binomial(v + spec.shift - 1, spec.shift) * Binomial(v + spec.k - 1, spec.k);
  const std::uint64_t col_deg = space.degree - spec.k + spec.shift;
  const std::uint64_t cols = Binomial(v + col_deg - 1, col_deg);
  if (rows > dimension_cap || cols > dimension_cap) {
    throw Error(ErrorCode::kDimensionCapExceeded, "matrix " + std::to_string(rows) + "x" +
                                                      std::to_string(cols) + " above cap " +
                                                      std::to_string(dimension_cap));
  }
  if (spec.size == 0 || spec.size > std::min(rows, cols)) {
    throw Error(ErrorCode::kMinorOutOfRange, "minor size " + std::to_string(spec.size) + " for a " +
                                                 std::to_string(rows) + "x" + std::to_string(cols) +
                                                 " matrix");
  }
  Rng rng(spec.seed);
  MetaPolynomial::MinorRep rep{spec, ResolveSelection(spec, spec.rows, rows, rng, "row"),
                               ResolveSelection(spec, spec.cols, cols, rng, "column"), nullptr,
                               dimension_cap};
  if (space.Dimension() <= kSymbolicSpaceLimit) {
    rep.symbolic = std::make_shared<const CoeffMatrix>(
        SymbolicShiftedPartials(field, space, spec.k, spec.shift, dimension_cap));
  }
  return MetaPolynomial(field, space, MinorId(spec), std::move(rep));
}

namespace {

void Subsets(std::uint32_t n, std::uint32_t size, std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> cur(size);
  for (std::uint32_t i = 0; i < size; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::uint32_t i = size;
    while (i > 0 && cur[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::uint32_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace

std::vector<MetaPolynomial> AllMinors(RankMethod method, std::uint32_t k, std::uint32_t shift,
                                      const PolySpace& space, const PrimeField& field,
                                      std::size_t dimension_cap) {
  RankMethodSpec spec;
  spec.method = method;
  spec.k = k;
  spec.shift = method == RankMethod::kPartials ? 0 : shift;
  const CoeffMatrix layout = SymbolicShiftedPartials(field, space, spec.k, spec.shift, dimension_cap);
  const auto rows = static_cast<std::uint32_t>(layout.rows());
  const auto cols = static_cast<std::uint32_t>(layout.cols());
  std::vector<MetaPolynomial> out;
  for (std::uint32_t size = 1; size <= std::min(rows, cols); ++size) {
    std::vector<std::vector<std::uint32_t>> row_sets, col_sets;
    Subsets(rows, size, row_sets);
    Subsets(cols, size, col_sets);
    for (const auto& r : row_sets) {
      for (const auto& c : col_sets) {
        spec.selection = MinorSelection::kExplicit;
        spec.size = size;
        spec.rows = r;
        spec.cols = c;
        out.push_back(MinorMeta(spec, space, field, dimension_cap));
      }
    }
  }
  return out;
}

CoeffMatrix RankMatrixFor(const RankMethodSpec& spec, const PolySpace& space,
                          std::span<const FieldElement> cv, std::size_t dimension_cap) {
  if (cv.empty()) throw Error(ErrorCode::kArityMismatch, "empty coefficient vector");
  const PrimeField field = cv.front().field();
  const SparsePoly f = FromCoeffVector(cv, MonomialIndex(space), field);
  const std::uint32_t shift = spec.method == RankMethod::kPartials ? 0 : spec.shift;
  return ShiftedPartialsMatrix(f, space.degree, spec.k, shift, dimension_cap);
}

std::vector<FieldElement> EvaluateBatch(const MetaPolynomial& t,
                                        const std::vector<std::vector<FieldElement>>& cvs,
                                        unsigned jobs) {
  std::vector<FieldElement> out(cvs.size(), t.field().Zero());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cvs.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cvs.size(); ++i) out[i] = t.Evaluate(cvs[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < cvs.size(); i += jobs) out[i] = t.Evaluate(cvs[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : workers) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace npl
