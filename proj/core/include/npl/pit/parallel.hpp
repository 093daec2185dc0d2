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

#ifndef NPL_PIT_PARALLEL_HPP_
#define NPL_PIT_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace npl {

/// Smallest i in [0, count) with hit(i), evaluating in rounds across up to
/// `jobs` threads. The answer does not depend on the worker count.
inline std::optional<std::uint64_t> FirstHit(std::uint64_t count, unsigned jobs,
                                             const std::function<bool(std::uint64_t)>& hit) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (hit(i)) return i;
    }
    return std::nullopt;
  }
  constexpr std::uint64_t kChunk = 64;
  for (std::uint64_t base = 0; base < count; base += kChunk * jobs) {
    std::vector<std::optional<std::uint64_t>> found(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          const std::uint64_t lo = base + w * kChunk;
          const std::uint64_t hi = std::min(count, lo + kChunk);
          for (std::uint64_t i = lo; i < hi; ++i) {
            if (hit(i)) {
              found[w] = i;
              return;
            }
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (unsigned w = 0; w < jobs; ++w) {
      if (errors[w]) std::rethrow_exception(errors[w]);
      if (found[w]) return found[w];
    }
  }
  return std::nullopt;
}

}  // namespace npl

#endif  // NPL_PIT_PARALLEL_HPP_
