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

// Combining two graphs: the activation test, the activating family T_m on
// C^{m+1}, bilinear feasibility for rank-one elements of (S (x) T)^perp, the
// Schmidt collapse for S (x) L(C^n), the structure check for three-codeword
// codebooks on C^2 (x) C^n and the qubit non-activation suite.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zequa/capacity.hpp"
#include "zequa/rankone.hpp"
#include "zequa/search.hpp"
#include "zequa/subspace.hpp"

namespace zequa {

inline constexpr int kDefaultMaxFamilyM = 7;

struct ActivationReport {
  CapacityReport alpha_s;
  CapacityReport alpha_t;
  CapacityReport alpha_combined;
  bool activated = false;
  bool superactivated = false;
  std::string caveat;
};

/// Activation means alpha(S (x) T) > alpha(S) * alpha(T) with one factor at
/// alpha = 1. The combined value must come with a verified codebook; the
/// factor values may rest on heuristic zero-capacity evidence, which the
/// caveat spells out.
ActivationReport check_activation(const NoncommGraph& s, const NoncommGraph& t,
                                  const SearchConfig& cfg,
                                  std::size_t max_ambient = kDefaultMaxAmbient);

struct FamilyInstance {
  int m = 0;
  NoncommGraph t;
  std::vector<Matrix> spanning_complement;  // B_ij = |i><j| + |i+1><j+1|
  Codebook codebook;                        // for C I_2 (x) T
};

/// T_m = span{B_ij : 0 <= i != j <= m-1}^perp on C^{m+1}, with the codebook
/// (|0>|i> + |1>|i+1>)/sqrt(2), i = 0..m-1, verified against C I_2 (x) T_m.
/// Throws Error(precondition) for m < 3, Error(size) for m > max_m.
FamilyInstance family_t(int m, int max_m = kDefaultMaxFamilyM);

struct Prop2Report {
  bool nonzero = false;             // (i) all v_i, w_i nonzero
  bool self_independent = false;    // (ii) v_i, w_i independent
  bool cross_independent = false;   // (iii) w_i, w_j independent
  double min_norm = 0.0;
  double min_self_sigma = 0.0;
  double min_cross_sigma = 0.0;
  bool all() const { return nonzero && self_independent && cross_independent; }
};

/// Splits psi_i = |0>|v_i> + |1>|w_i> and checks the three properties with
/// threshold 1e-10. Throws Error(dimension) unless there are exactly three
/// vectors of dimension 2n.
Prop2Report prop2_verify(std::span<const StateVector> codebook, Index n);

struct FamilyVerification {
  int m = 0;
  bool verify_all = false;
  std::size_t t_dim = 0;
  GraphCheck graph;
  double spanning_residual = 0.0;  // max |P_T(B_ij)| / |B_ij|
  double diagonal_residual = 0.0;  // max distance of the diagonals from T
  std::size_t codebook_size = 0;
  double ortho_residual = 0.0;
  double graph_residual = 0.0;
  ZeroCapacityEvidence t_zero;       // rank-one search on T^perp
  std::optional<Prop2Report> prop2;  // first three codewords
  // Certified codebook of size m > alpha(C I_2) * 1, with T's alpha = 1
  // resting on t_zero.
  bool activated = false;

  /// activated, plus every structural check when verify_all is set.
  bool passed() const;
};

/// Checks a family instance. The rank-one search on T^perp always runs;
/// verify_all adds the graph check, B_ij orthogonality, diagonal membership,
/// the dimension count and the three-codeword structure.
FamilyVerification verify_family(const FamilyInstance& family, const SearchConfig& cfg,
                                 bool verify_all);

/// Alternating-sign diagonals spanning T_m, in order:
///   sum_k (-1)^k |k><j+k|   for j = 1..m
///   |i><i|                  for i = 0..m
///   sum_k (-1)^k |j+k><k|   for j = 1..m
std::vector<Matrix> family_diagonals(int m);

struct BilinearWitness {
  Matrix a;  // m1 x m2, unit Frobenius norm
  Matrix b;  // n2 x n1, unit Frobenius norm
  double residual = 0.0;
};

struct BilinearSearch {
  std::optional<BilinearWitness> witness;  // present when feasible
  double best_residual = 0.0;
  std::size_t restarts_used = 0;
  bool feasible() const { return witness.has_value(); }
};

inline constexpr double kBilinearFeasible = 1e-8;

/// max over basis pairs (P in S, Q in T) of |Tr[P^dagger A conj(Q) B]|.
/// Throws Error(dimension) if A is not m1 x m2 or B is not n2 x n1.
double bilinear_residual(const OperatorSubspace& s, const OperatorSubspace& t,
                         const Matrix& a, const Matrix& b);

/// 64 restarts, otherwise SearchConfig defaults.
SearchConfig bilinear_defaults();

/// Searches nonzero A, B with S perp A conj(T) B by alternating
/// least-singular-vector updates of A (B fixed) and B (A fixed), both kept
/// at unit norm. Feasible when the residual drops below 1e-8.
BilinearSearch bilinear_feasibility(const OperatorSubspace& s, const OperatorSubspace& t,
                                    const SearchConfig& cfg = bilinear_defaults());

/// Converts a rank-one |psi><phi| in (S (x) T)^perp into the matching
/// witness: A = sum a_ij |i><j|, B = sum conj(b_kl) |l><k|.
BilinearWitness witness_from_rank_one(const OperatorSubspace& s, const OperatorSubspace& t,
                                      const StateVector& psi, const StateVector& phi);

struct Lemma5Check {
  bool agree = false;
  RankOneResult rank_one;  // on complement(tensor(S, T))
  BilinearSearch bilinear;
};

/// Both routes to "does (S (x) T)^perp contain a rank-one matrix" with the
/// same config; agree is false when exactly one of them succeeds.
Lemma5Check lemma5_crosscheck(const OperatorSubspace& s, const OperatorSubspace& t,
                              const SearchConfig& cfg);

struct SchmidtCollapse {
  std::vector<StateVector> left;   // Schmidt vectors of phi on the S factor
  std::vector<StateVector> right;  // Schmidt vectors of psi on the S factor
  double precondition_residual = 0.0;
  double residual = 0.0;  // max |<lambda_s|A|mu_t>| over the basis of S
};

/// For |phi><psi| perp S (x) L(C^n), every pair of retained Schmidt vectors
/// (coefficient > 1e-10) satisfies |lambda_s><mu_t| perp S.
/// Throws Error(invalid_codeword) when the precondition residual is >= 1e-8
/// or the collapsed residual cannot be certified below 1e-8.
SchmidtCollapse schmidt_collapse(const StateVector& phi, const StateVector& psi,
                                 const NoncommGraph& s, Index n);

struct QubitPair {
  std::string s_name, t_name;
  std::size_t alpha_s = 0, alpha_t = 0;  // exact qubit values
  CapacityReport combined;               // search
  bool activated = false;                // combined > alpha_s * alpha_t
};

struct QubitSuite {
  std::vector<QubitPair> pairs;  // 16 ordered pairs
  // alpha(S (x) L(C^2)) == alpha(S) for each qubit graph S.
  std::vector<std::pair<std::string, bool>> completely_noisy;
  bool passed() const;
};

QubitSuite qubit_nonactivation_suite(const SearchConfig& cfg);

}  // namespace zequa
