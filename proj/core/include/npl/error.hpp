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

#ifndef NPL_ERROR_HPP_
#define NPL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace npl {

enum class ErrorCode {
  kNotPrime,
  kDivisionByZero,
  kFieldMismatch,
  kSpaceMismatch,
  kArityMismatch,
  kTermCapExceeded,
  kDimensionCapExceeded,
  kCharacteristicTooSmall,
  kOrderOutOfRange,
  kMinorOutOfRange,
  kDescriptorInvalid,
  kEnumerationBudgetExceeded,
  kClauseTooWide,
  kParseError,
};

std::string_view ToString(ErrorCode code);

// All library failures surface as npl::Error; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace npl

#endif  // NPL_ERROR_HPP_
