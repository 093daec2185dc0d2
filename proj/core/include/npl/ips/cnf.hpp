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

#ifndef NPL_IPS_CNF_HPP_
#define NPL_IPS_CNF_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace npl {

/// Clauses of DIMACS literals: +i is x_i, -i is NOT x_i (1-based).
struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  /// assignment[i] is the value of x_{i+1}.
  bool Satisfies(const std::vector<bool>& assignment) const;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Reads "p cnf <vars> <clauses>" followed by 0-terminated clauses.
/// Comment lines start with 'c'; a lone '%' ends the input. Throws
/// Error(kParseError) naming the line on malformed input.
Cnf ParseDimacs(std::istream& in);
Cnf ParseDimacsString(const std::string& text);
std::string ToDimacs(const Cnf& cnf);

}  // namespace npl

#endif  // NPL_IPS_CNF_HPP_
