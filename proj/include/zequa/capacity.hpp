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

// One-shot zero-error capacity bounds.
//
// A codebook for a graph S is a set of orthonormal states with
// <psi_s| A |psi_t> = 0 for every A in S and s != t. alpha(S) is the size of
// the largest codebook and the one-shot capacity is log2(alpha(S)) bits.
// Lower bounds come from certified codebooks; exact values only from the
// qubit classification, alpha = ambient dimension, or an empty complement.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zequa/matrix.hpp"
#include "zequa/search.hpp"
#include "zequa/subspace.hpp"

namespace zequa {

inline constexpr double kOrthoThreshold = 1e-10;
inline constexpr double kGraphThreshold = 1e-8;
inline constexpr double kPenaltySuccess = 1e-20;

struct CodebookResiduals {
  double ortho = 0.0;  // max |<psi_i|psi_j> - delta_ij|
  double graph = 0.0;  // max over i != j and basis A of |<psi_i|A|psi_j>|
};

/// Direct evaluation of both residuals. Throws Error(dimension) if a vector
/// does not match the ambient.
CodebookResiduals verify_codebook(const OperatorSubspace& graph,
                                  std::span<const StateVector> vectors);
CodebookResiduals verify_codebook(const NoncommGraph& graph,
                                  std::span<const StateVector> vectors);

struct Codebook {
  Index graph_dim = 0;
  std::vector<StateVector> vectors;
  double ortho_residual = 0.0;
  double graph_residual = 0.0;

  std::size_t size() const { return vectors.size(); }
  bool valid() const {
    return ortho_residual < kOrthoThreshold && graph_residual < kGraphThreshold;
  }
};

/// Verifies `vectors` against `graph` and packages them; check valid().
Codebook make_codebook(const NoncommGraph& graph, std::vector<StateVector> vectors);

/// psi_i (x) phi_j for all i, j; valid for the tensor graph whenever both
/// inputs are valid for their factors.
std::vector<StateVector> product_vectors(const Codebook& a, const Codebook& b);

struct CodebookSearch {
  std::optional<Codebook> codebook;  // present on success
  double best_penalty = 0.0;
  std::size_t restarts_used = 0;
};

/// Multi-start Levenberg-Marquardt on
///   F = sum_{i != j} sum_k |<psi_i|A_k|psi_j>|^2
///       + sum_{i <= j} |<psi_i|psi_j> - delta_ij|^2
/// over m unit vectors, renormalized after every step. Success needs
/// F < 1e-20 and an independent re-verification. Restart 0 starts from
/// `warm_start` (padded with random vectors) when given.
/// Throws Error(precondition) unless 2 <= m <= ambient dimension.
CodebookSearch codebook_search(const NoncommGraph& graph, std::size_t m,
                               const SearchConfig& cfg,
                               std::span<const StateVector> warm_start = {});

enum class Method { qubit_exact, rank_one_certified, search, trivial };

const char* to_string(Method m) noexcept;

struct CapacityReport {
  std::size_t alpha_lower = 1;
  std::optional<std::size_t> alpha_exact;
  double bits_lower = 0.0;
  Method method = Method::search;
  std::optional<Codebook> codebook;
  // Search bookkeeping: the first codebook size that failed and the best
  // penalty reached there (absent when the search never failed).
  std::optional<std::size_t> failed_size;
  double failed_penalty = 0.0;
  std::size_t restarts_used = 0;
  // Best sigma_2/sigma_1 of the rank-one search on the complement, when run.
  std::optional<double> rank_one_best_ratio;
  std::string note;

  /// alpha_exact when known, else alpha_lower.
  std::size_t best_alpha() const { return alpha_exact.value_or(alpha_lower); }
};

/// Grows m from 2 while codebook_search succeeds. m = 2 is first tried
/// through a rank-one certificate in the complement. A valid warm-start
/// codebook is adopted as the incumbent.
CapacityReport alpha_lower(const NoncommGraph& graph, const SearchConfig& cfg,
                           std::span<const StateVector> warm_start = {});

/// Exact value for qubit graphs: dim 1 or 2 gives alpha 2, dim 3 or 4 gives
/// alpha 1. Throws Error(precondition) unless the ambient is 2.
CapacityReport alpha_exact_qubit(const NoncommGraph& graph);

/// Exact path when applicable (qubit classification, C I_n, diagonal
/// algebra, empty complement), otherwise alpha_lower.
CapacityReport capacity(const NoncommGraph& graph, const SearchConfig& cfg,
                        std::span<const StateVector> warm_start = {});

struct TensorPowerReport {
  std::size_t k = 1;
  Index ambient = 0;
  bool structural = false;  // recognized without search
  CapacityReport report;
  double bits_per_use = 0.0;  // report.bits_lower / k
};

/// Capacity bound for the k-fold tensor power; bits are normalized by k.
/// The graph span{I, sigma_3}^(x)k is recognized as the diagonal algebra.
/// Throws Error(size) if ambient^k exceeds max_ambient.
TensorPowerReport tensor_power_lower(const NoncommGraph& graph, std::size_t k,
                                     const SearchConfig& cfg,
                                     std::size_t max_ambient = kDefaultMaxAmbient);

/// True when the graph is the span of all diagonal matrix units.
bool is_diagonal_algebra(const OperatorSubspace& s);

}  // namespace zequa
