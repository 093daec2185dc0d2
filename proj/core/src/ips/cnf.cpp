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

#include "npl/ips/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "npl/error.hpp"

namespace npl {

bool Cnf::Satisfies(const std::vector<bool>& assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Cnf ParseDimacs(std::istream& in) {
  Cnf cnf;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParseError, "DIMACS line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      if (have_header) fail("duplicate header");
      std::string fmt;
      long long vars = -1, count = -1;
      if (!(ls >> fmt >> vars >> count) || fmt != "cnf" || vars < 0 || count < 0) {
        fail("expected 'p cnf <vars> <clauses>'");
      }
      cnf.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause before 'p cnf' header");
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') fail("bad literal '" + tok + "'");
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > cnf.num_vars) {
          fail("literal " + tok + " exceeds declared variable count " + std::to_string(cnf.num_vars));
        }
        current.push_back(static_cast<int>(lit));
      }
    } while (ls >> tok);
  }
  if (!have_header) throw Error(ErrorCode::kParseError, "DIMACS: missing 'p cnf' header");
  if (!current.empty()) throw Error(ErrorCode::kParseError, "DIMACS: last clause not terminated by 0");
  if (cnf.clauses.size() != declared_clauses) {
    throw Error(ErrorCode::kParseError, "DIMACS: header declares " + std::to_string(declared_clauses) +
                                            " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

Cnf ParseDimacsString(const std::string& text) {
  std::istringstream in(text);
  return ParseDimacs(in);
}

std::string ToDimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace npl
