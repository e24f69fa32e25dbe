// Copyright 2026 The Zequa Authors
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

#pragma once

// Multi-start harness shared by the rank-one, codebook and bilinear
// searches.
//
// Restart r of a search with seed s draws from a std::mt19937_64 seeded with
// restart_seed(s, r) = splitmix64(s + (r + 1) * 0x9E3779B97F4A7C15). Restarts
// are evaluated in index order (possibly in parallel batches); a search
// stops after the first restart that meets its success test, so the set of
// evaluated restarts is always a prefix 0..k of the schedule and the merged
// result does not depend on the thread count.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "zequa/matrix.hpp"

namespace zequa {

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t restarts = 256;
  std::size_t max_iters = 5000;
  double tol = 1e-7;

  /// Throws Error(precondition) unless restarts, max_iters and tol are
  /// positive.
  void validate() const;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) noexcept;

/// Complex standard normal vector (real and imaginary parts N(0, 1/2)).
Vector random_complex_normal(std::mt19937_64& rng, Index n);
Matrix random_complex_normal(std::mt19937_64& rng, Index rows, Index cols);

/// Worker threads used for restart batches; 1 disables threading.
std::size_t restart_threads();

/// Runs attempt(0), attempt(1), ... up to `count`, stopping after the first
/// result for which `done` is true. Returns the evaluated prefix in order.
template <class Result>
std::vector<Result> run_restarts(std::size_t count,
                                 const std::function<Result(std::size_t)>& attempt,
                                 const std::function<bool(const Result&)>& done) {
  std::vector<Result> results;
  results.reserve(count);
  const std::size_t threads = restart_threads();
  if (threads <= 1) {
    for (std::size_t r = 0; r < count; ++r) {
      results.push_back(attempt(r));
      if (done(results.back())) break;
    }
    return results;
  }
  for (std::size_t begin = 0; begin < count; begin += threads) {
    const std::size_t end = std::min(count, begin + threads);
    std::vector<std::optional<Result>> batch(end - begin);
    {
      std::vector<std::jthread> workers;
      for (std::size_t r = begin; r < end; ++r)
        workers.emplace_back([&, r] { batch[r - begin].emplace(attempt(r)); });
    }
    for (auto& slot : batch) {
      results.push_back(std::move(*slot));
      if (done(results.back())) return results;
    }
  }
  return results;
}

}  // namespace zequa
