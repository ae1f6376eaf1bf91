// Copyright 2026 The morphoseg Authors
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

// Order-preserving parallel map over indexed work items.

#ifndef MORPHOSEG_PARALLEL_H_
#define MORPHOSEG_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "morphoseg/core.h"

namespace morphoseg {

struct ItemResult {
  std::string output;
  Diagnostics diag;
  std::exception_ptr error;
};

// Runs fn(i, diag) for i in [0, n) on up to `jobs` threads, each thread
// taking one contiguous block. Results come back in input order.
template <typename Fn>
std::vector<ItemResult> parallel_map(std::size_t n, std::size_t jobs, Fn fn) {
  std::vector<ItemResult> results(n);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        results[i].output = fn(i, results[i].diag);
      } catch (...) {
        results[i].error = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs <= 1) {
    run(0, n);
    return results;
  }
  std::vector<std::thread> threads;
  const std::size_t block = (n + jobs - 1) / jobs;
  for (std::size_t b = 0; b < n; b += block) threads.emplace_back(run, b, std::min(n, b + block));
  for (std::thread& t : threads) t.join();
  return results;
}

}  // namespace morphoseg

#endif  // MORPHOSEG_PARALLEL_H_
