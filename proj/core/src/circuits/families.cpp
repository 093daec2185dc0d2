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

#include "npl/circuits/families.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "npl/algebra/random.hpp"
#include "npl/error.hpp"

namespace npl {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e && r != kSaturated; ++i) r = SaturatingMul(r, base);
  return r;
}

bool Affine(const PolySpace& space) { return space.mode == SpaceMode::kAtMost; }

std::size_t FormWidth(const PolySpace& space) { return space.num_vars + (Affine(space) ? 1 : 0); }

AffineForm FormAt(const PrimeField& field, const PolySpace& space,
                  std::span<const std::uint64_t> scalars, std::size_t offset) {
  std::vector<std::uint64_t> coeffs(scalars.begin() + static_cast<std::ptrdiff_t>(offset),
                                    scalars.begin() + static_cast<std::ptrdiff_t>(offset + space.num_vars));
  const std::uint64_t constant = Affine(space) ? scalars[offset + space.num_vars] : 0;
  return AffineForm(field, std::move(coeffs), constant);
}

SparsePoly Rebuild(const FamilyDescriptor& desc, const PrimeField& field, const FamilyWitness& w,
                   std::size_t term_cap) {
  const std::size_t v = desc.space.num_vars;
  return std::visit(
      [&](const auto& wit) -> SparsePoly {
        using W = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<W, DetWitness>) {
          return DetProjection(wit.matrix, term_cap);
        } else if constexpr (std::is_same_v<W, SpsWitness>) {
          return SpsBuild(field, v, wit.products, term_cap);
        } else if constexpr (std::is_same_v<W, SparseWitness>) {
          MonomialIndex index(desc.space);
          SparsePoly f(field, v);
          for (std::size_t i = 0; i < wit.support.size(); ++i) {
            f.AddTerm(index.Unrank(wit.support[i]), wit.coeffs.at(i));
          }
          return f;
        } else if constexpr (std::is_same_v<W, SquaresWitness>) {
          return wit.form.ToPoly().Pow(2, term_cap);
        } else {
          MonomialIndex index(desc.space);
          std::vector<FieldElement> cv;
          cv.reserve(wit.coeffs.size());
          for (auto c : wit.coeffs) cv.push_back(FieldElement::FromCanonical(field, c));
          return FromCoeffVector(cv, index, field);
        }
      },
      w);
}

}  // namespace

SparsePoly SpsBuild(PrimeField field, std::size_t num_vars,
                    const std::vector<std::vector<AffineForm>>& products, std::size_t term_cap) {
  SparsePoly sum(field, num_vars);
  for (const auto& product : products) {
    SparsePoly term = SparsePoly::Constant(field, num_vars, 1);
    for (const auto& form : product) {
      if (form.num_vars() != num_vars) {
        throw Error(ErrorCode::kArityMismatch, "form in " + std::to_string(form.num_vars()) +
                                                   " variables, expected " + std::to_string(num_vars));
      }
      if (!(form.field() == field)) throw Error(ErrorCode::kFieldMismatch, "form over another field");
      term = term.Multiply(form.ToPoly(), term_cap);
    }
    sum += term;
    if (sum.num_terms() > term_cap) {
      throw Error(ErrorCode::kTermCapExceeded, "sum exceeds " + std::to_string(term_cap) + " terms");
    }
  }
  return sum;
}

SparsePoly PadPolynomial(const SparsePoly& f, const AffineForm& l, std::uint32_t e,
                         std::size_t term_cap) {
  if (l.num_vars() != f.num_vars()) {
    throw Error(ErrorCode::kArityMismatch, "padding form and polynomial disagree on variable count");
  }
  if (e == 0 || f.IsZero()) return f;
  return l.ToPoly().Pow(e, term_cap).Multiply(f, term_cap);
}

std::string ToString(FamilyClass c) {
  switch (c) {
    case FamilyClass::kDetProjection: return "det-projection";
    case FamilyClass::kSps: return "sps";
    case FamilyClass::kSparse: return "sparse";
    case FamilyClass::kSquares: return "squares";
    case FamilyClass::kFullSpace: return "full-space";
  }
  return "unknown";
}

FamilyClass FamilyClassFromString(const std::string& s) {
  if (s == "det-projection") return FamilyClass::kDetProjection;
  if (s == "sps") return FamilyClass::kSps;
  if (s == "sparse") return FamilyClass::kSparse;
  if (s == "squares") return FamilyClass::kSquares;
  if (s == "full-space") return FamilyClass::kFullSpace;
  throw Error(ErrorCode::kDescriptorInvalid, "unknown family class '" + s + "'");
}

void FamilyDescriptor::Validate() const {
  if (space.num_vars == 0) throw Error(ErrorCode::kDescriptorInvalid, "space needs variables");
  const std::uint64_t dim = space.Dimension();
  switch (class_id) {
    case FamilyClass::kDetProjection:
      if (n == 0 || n > kMaxDetSide) {
        throw Error(ErrorCode::kDescriptorInvalid,
                    "det-projection side must be in [1, " + std::to_string(kMaxDetSide) + "]");
      }
      if (space.degree != n) {
        throw Error(ErrorCode::kDescriptorInvalid, "det-projection with n=" + std::to_string(n) +
                                                       " needs degree " + std::to_string(n) +
                                                       ", space is " + space.ToString());
      }
      break;
    case FamilyClass::kSps:
      if (top_fan_in == 0) throw Error(ErrorCode::kDescriptorInvalid, "sps needs top_fan_in >= 1");
      break;
    case FamilyClass::kSparse:
      if (sparsity == 0 || sparsity > dim) {
        throw Error(ErrorCode::kDescriptorInvalid,
                    "sparsity " + std::to_string(sparsity) + " outside [1, " + std::to_string(dim) + "]");
      }
      break;
    case FamilyClass::kSquares:
      if (space.degree != 2) {
        throw Error(ErrorCode::kDescriptorInvalid, "squares family needs degree 2, space is " +
                                                       space.ToString());
      }
      break;
    case FamilyClass::kFullSpace:
      break;
  }
}

std::uint64_t FamilyDescriptor::ScalarCount() const {
  const std::uint64_t w = FormWidth(space);
  switch (class_id) {
    case FamilyClass::kDetProjection: return std::uint64_t{n} * n * w;
    case FamilyClass::kSps: return std::uint64_t{top_fan_in} * space.degree * w;
    case FamilyClass::kSparse: return sparsity;
    case FamilyClass::kSquares: return w;
    case FamilyClass::kFullSpace: return space.Dimension();
  }
  return 0;
}

std::string FamilyDescriptor::ToString() const {
  std::string s = npl::ToString(class_id);
  if (class_id == FamilyClass::kDetProjection) s += ":n=" + std::to_string(n);
  if (class_id == FamilyClass::kSps) s += ":k=" + std::to_string(top_fan_in);
  if (class_id == FamilyClass::kSparse) s += ":s=" + std::to_string(sparsity);
  return s + "@" + space.ToString();
}

FamilyMember MemberFromParameters(const FamilyDescriptor& desc, const PrimeField& field,
                                  std::span<const std::uint64_t> scalars,
                                  std::span<const std::uint64_t> support, std::size_t term_cap) {
  desc.Validate();
  if (scalars.size() != desc.ScalarCount()) {
    throw Error(ErrorCode::kDescriptorInvalid, std::to_string(scalars.size()) + " scalars for " +
                                                   desc.ToString() + ", expected " +
                                                   std::to_string(desc.ScalarCount()));
  }
  const auto& space = desc.space;
  const std::size_t w = FormWidth(space);
  FamilyWitness witness = FullWitness{};
  switch (desc.class_id) {
    case FamilyClass::kDetProjection: {
      std::vector<AffineForm> entries;
      for (std::size_t i = 0; i < std::size_t{desc.n} * desc.n; ++i) {
        entries.push_back(FormAt(field, space, scalars, i * w));
      }
      witness = DetWitness{AffineMatrixMap(desc.n, std::move(entries))};
      break;
    }
    case FamilyClass::kSps: {
      std::vector<std::vector<AffineForm>> products(desc.top_fan_in);
      for (std::size_t i = 0; i < desc.top_fan_in; ++i) {
        for (std::size_t j = 0; j < space.degree; ++j) {
          products[i].push_back(FormAt(field, space, scalars, (i * space.degree + j) * w));
        }
      }
      witness = SpsWitness{std::move(products)};
      break;
    }
    case FamilyClass::kSparse: {
      if (support.size() != desc.sparsity) {
        throw Error(ErrorCode::kDescriptorInvalid, "sparse support has wrong size");
      }
      const std::uint64_t dim = space.Dimension();
      for (auto r : support) {
        if (r >= dim) throw Error(ErrorCode::kDescriptorInvalid, "sparse support index out of range");
      }
      witness = SparseWitness{{support.begin(), support.end()}, {scalars.begin(), scalars.end()}};
      break;
    }
    case FamilyClass::kSquares:
      witness = SquaresWitness{FormAt(field, space, scalars, 0)};
      break;
    case FamilyClass::kFullSpace:
      witness = FullWitness{{scalars.begin(), scalars.end()}};
      break;
  }
  SparsePoly poly = Rebuild(desc, field, witness, term_cap);
  return FamilyMember{std::move(poly), std::move(witness)};
}

FamilyMember SampleFamily(const FamilyDescriptor& desc, const PrimeField& field, std::uint64_t seed,
                          std::size_t term_cap) {
  desc.Validate();
  Rng rng(seed);
  std::vector<std::uint64_t> scalars(desc.ScalarCount());
  for (auto& s : scalars) s = rng.Residue(field);
  std::vector<std::uint64_t> support;
  if (desc.class_id == FamilyClass::kSparse) {
    const std::uint64_t dim = desc.space.Dimension();
    std::set<std::uint64_t> chosen;
    while (chosen.size() < desc.sparsity) chosen.insert(rng.Below(dim));
    support.assign(chosen.begin(), chosen.end());
  }
  FamilyMember member = MemberFromParameters(desc, field, scalars, support, term_cap);
  if (!ValidateMember(desc, member, term_cap)) {
    throw Error(ErrorCode::kDescriptorInvalid, "sampled member of " + desc.ToString() +
                                                   " failed validation");
  }
  return member;
}

bool ValidateMember(const FamilyDescriptor& desc, const FamilyMember& member, std::size_t term_cap) {
  if (!FitsSpace(member.poly, desc.space)) return false;
  const bool class_matches = std::visit(
      [&](const auto& wit) {
        using W = std::decay_t<decltype(wit)>;
        switch (desc.class_id) {
          case FamilyClass::kDetProjection:
            if constexpr (std::is_same_v<W, DetWitness>) {
              return wit.matrix.side() == desc.n && wit.matrix.num_vars() == desc.space.num_vars &&
                     (Affine(desc.space) || wit.matrix.IsHomogeneous());
            }
            return false;
          case FamilyClass::kSps:
            if constexpr (std::is_same_v<W, SpsWitness>) {
              if (wit.products.size() > desc.top_fan_in) return false;
              for (const auto& p : wit.products) {
                if (p.size() > desc.space.degree) return false;
                for (const auto& f : p) {
                  if (!Affine(desc.space) && !f.IsHomogeneous()) return false;
                }
              }
              return true;
            }
            return false;
          case FamilyClass::kSparse:
            if constexpr (std::is_same_v<W, SparseWitness>) {
              return wit.support.size() <= desc.sparsity && wit.support.size() == wit.coeffs.size();
            }
            return false;
          case FamilyClass::kSquares:
            if constexpr (std::is_same_v<W, SquaresWitness>) {
              return wit.form.num_vars() == desc.space.num_vars &&
                     (Affine(desc.space) || wit.form.IsHomogeneous());
            }
            return false;
          case FamilyClass::kFullSpace:
            return std::is_same_v<W, FullWitness>;
        }
        return false;
      },
      member.witness);
  if (!class_matches) return false;
  return Rebuild(desc, member.poly.field(), member.witness, term_cap) == member.poly;
}

std::uint64_t ParameterGridSize(const FamilyDescriptor& desc, const PrimeField& field) {
  desc.Validate();
  std::uint64_t grid = SaturatingPow(field.modulus(), desc.ScalarCount());
  if (desc.class_id == FamilyClass::kSparse) {
    std::uint64_t supports;
    try {
      supports = Binomial(desc.space.Dimension(), desc.sparsity);
    } catch (const Error&) {
      supports = kSaturated;
    }
    grid = SaturatingMul(grid, supports);
  }
  return grid;
}

std::uint64_t ForEachMember(const FamilyDescriptor& desc, const PrimeField& field,
                            std::uint64_t budget,
                            const std::function<bool(const FamilyMember&)>& visit,
                            std::size_t term_cap) {
  const std::uint64_t grid = ParameterGridSize(desc, field);
  if (grid > budget) {
    throw Error(ErrorCode::kEnumerationBudgetExceeded,
                desc.ToString() + " over F_" + std::to_string(field.modulus()) + " has " +
                    (grid == kSaturated ? std::string("more than 2^64") : std::to_string(grid)) +
                    " parameter choices, budget " + std::to_string(budget));
  }
  const std::size_t count = desc.ScalarCount();
  const std::uint64_t p = field.modulus();

  std::vector<std::uint64_t> support;
  std::uint64_t dim = 0;
  if (desc.class_id == FamilyClass::kSparse) {
    dim = desc.space.Dimension();
    for (std::uint64_t i = 0; i < desc.sparsity; ++i) support.push_back(i);
  }

  std::uint64_t visited = 0;
  while (true) {
    std::vector<std::uint64_t> scalars(count, 0);
    while (true) {
      ++visited;
      if (!visit(MemberFromParameters(desc, field, scalars, support, term_cap))) return visited;
      std::size_t i = 0;
      while (i < count && ++scalars[i] == p) scalars[i++] = 0;
      if (i == count) break;
    }
    if (support.empty()) return visited;
    // Next combination of support ranks in lexicographic order.
    const std::size_t s = support.size();
    std::size_t i = s;
    while (i > 0 && support[i - 1] == dim - s + i - 1) --i;
    if (i == 0) return visited;
    ++support[i - 1];
    for (std::size_t j = i; j < s; ++j) support[j] = support[j - 1] + 1;
  }
}

}  // namespace npl
