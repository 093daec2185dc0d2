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

#include "npl/error.hpp"

namespace npl {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kTermCapExceeded: return "TermCapExceeded";
    case ErrorCode::kDimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::kCharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::kOrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::kMinorOutOfRange: return "MinorOutOfRange";
    case ErrorCode::kDescriptorInvalid: return "DescriptorInvalid";
    case ErrorCode::kEnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::kClauseTooWide: return "ClauseTooWide";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace npl
