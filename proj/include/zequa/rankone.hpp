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

// Rank-one detection in matrix subspaces.
//
// A subspace S contains a rank-one matrix iff max over unit x, y of
// |P_S(x y^dagger)|_F equals 1, where P_S is the orthogonal projection. Each
// restart maximizes that quantity by alternating top-eigenvector updates of
// x and y, then reads off M = P_S(x y^dagger) / |.| and its ratio
// sigma_2 / sigma_1. Since |M|_F = 1, maximizing sigma_1 is the same as
// minimizing the tail sigma_2^2 + sigma_3^2 + ... on the unit sphere of S.
//
// A "found" verdict always carries a certificate that has been re-checked
// against S. "not_found" is heuristic evidence only.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zequa/matrix.hpp"
#include "zequa/search.hpp"
#include "zequa/subspace.hpp"

namespace zequa {

struct RankOneCertificate {
  std::vector<Complex> coeffs;  // combination of the subspace basis, unit norm
  StateVector left;
  StateVector right;
  double sigma_ratio = 0.0;

  /// sum_k coeffs[k] * basis[k].
  Matrix combine(const OperatorSubspace& s) const;
};

enum class Verdict { found, not_found };

const char* to_string(Verdict v) noexcept;

struct RankOneResult {
  Verdict verdict = Verdict::not_found;
  std::optional<RankOneCertificate> certificate;
  double best_ratio = 0.0;  // +inf when the subspace is {0}
  std::size_t restarts_used = 0;
  std::uint64_t seed = 0;
};

/// Certificate soundness: the combined matrix lies in s (within 1e-8), has
/// sigma_2/sigma_1 < 1e-6, and matches sigma_1 * left * right^dagger to
/// relative Frobenius error 1e-6.
bool verify_certificate(const OperatorSubspace& s, const RankOneCertificate& cert);

RankOneResult find_rank_one(const OperatorSubspace& s, const SearchConfig& cfg = {});

/// Exact path for one-dimensional subspaces: found iff sigma_2/sigma_1 of the
/// single basis element is below 1e-10. Throws Error(precondition) if
/// dim != 1.
RankOneResult rank_one_exact_1d(const OperatorSubspace& s);

enum class ZeroCapacity { certified_positive, likely_zero };

const char* to_string(ZeroCapacity z) noexcept;

struct ZeroCapacityEvidence {
  ZeroCapacity verdict = ZeroCapacity::likely_zero;
  std::size_t complement_dim = 0;
  RankOneResult search;  // run on the complement of the graph
};

/// One-shot capacity is zero iff the complement holds no rank-one matrix.
/// Positive capacity is certified; zero capacity is only evidenced.
ZeroCapacityEvidence capacity_is_zero(const NoncommGraph& g,
                                      const SearchConfig& cfg = {});

}  // namespace zequa
