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

#include "zequa/search.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "zequa/errors.hpp"

namespace zequa {

void SearchConfig::validate() const {
  if (restarts == 0)
    throw Error(ErrorKind::precondition, "search config: restarts must be positive");
  if (max_iters == 0)
    throw Error(ErrorKind::precondition, "search config: max_iters must be positive");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw Error(ErrorKind::precondition, "search config: tol must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) noexcept {
  return splitmix64(seed + (static_cast<std::uint64_t>(restart) + 1) *
                               0x9E3779B97F4A7C15ULL);
}

Vector random_complex_normal(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Vector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex{re, im};
  }
  return v;
}

Matrix random_complex_normal(std::mt19937_64& rng, Index rows, Index cols) {
  const Vector v = random_complex_normal(rng, rows * cols);
  return unvectorize(v, rows, cols);
}

std::size_t restart_threads() {
  if (const char* env = std::getenv("ZEQUA_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min<std::size_t>(hw, 8);
}

}  // namespace zequa
