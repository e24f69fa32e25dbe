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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zequa/matrix.hpp"

namespace zequa {

/// Largest ambient dimension (rows or cols) produced by tensor products.
inline constexpr std::size_t kDefaultMaxAmbient = 64;

/// Tolerance for membership, dagger closure and basis orthonormality.
inline constexpr double kSubspaceTol = 1e-10;

/// A subspace of C^{rows x cols}, held as a Hilbert-Schmidt orthonormal
/// basis. Rectangular ambients are allowed; only graphs must be square.
class OperatorSubspace {
 public:
  /// The zero subspace.
  OperatorSubspace(Index rows, Index cols);

  static OperatorSubspace from_spanning(std::span<const Matrix> mats,
                                        double tol = kSubspaceTol);

  /// Adopts `basis` as-is after checking shapes and that its Gram matrix is
  /// the identity within kSubspaceTol. Throws Error(precondition) otherwise.
  static OperatorSubspace from_orthonormal(Index rows, Index cols,
                                           std::vector<Matrix> basis);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  /// Orthogonal projection of m onto the subspace.
  Matrix project(const Matrix& m) const;
  /// Frobenius norm of m minus its projection.
  double residual(const Matrix& m) const;
  /// residual(m) < tol * max(1, |m|).
  bool contains(const Matrix& m, double tol = kSubspaceTol) const;

  /// (rows*cols) x dim matrix whose columns are the vectorized basis.
  Matrix frame() const;
  /// Projector on vectorized matrices, (rows*cols) x (rows*cols).
  Matrix projector() const;

 private:
  OperatorSubspace(Index rows, Index cols, std::vector<Matrix> basis);

  Index rows_;
  Index cols_;
  std::vector<Matrix> basis_;
};

OperatorSubspace complement(const OperatorSubspace& s);
OperatorSubspace tensor(const OperatorSubspace& s, const OperatorSubspace& t,
                        std::size_t max_ambient = kDefaultMaxAmbient);
OperatorSubspace conjugate(const OperatorSubspace& s);

/// Frobenius distance between the two projectors; Error(dimension) when the
/// ambients differ.
double projector_distance(const OperatorSubspace& a, const OperatorSubspace& b);

struct GraphCheck {
  bool dagger_closed = false;
  bool contains_identity = false;
  double dagger_residual = 0.0;    // worst |M^dagger - P(M^dagger)| over basis
  double identity_residual = 0.0;  // |I - P(I)|

  bool ok() const { return dagger_closed && contains_identity; }
  std::string diagnostic() const;
};

/// Checks S = S^dagger and I in S. Throws Error(dimension) on a
/// non-square ambient.
GraphCheck check_noncomm_graph(const OperatorSubspace& s);

/// An operator subspace certified to be self-adjoint and to contain the
/// identity.
class NoncommGraph {
 public:
  /// Throws Error(precondition) with the check diagnostic when `space` is
  /// not a noncommutative graph.
  explicit NoncommGraph(OperatorSubspace space);

  const OperatorSubspace& space() const { return space_; }
  Index dim() const { return space_.rows(); }

 private:
  OperatorSubspace space_;
};

struct KrausChannel {
  std::vector<Matrix> kraus;
};

/// span{E_i^dagger E_j}. Throws Error(channel) unless sum E^dagger E = I
/// within 1e-10.
NoncommGraph from_kraus(const KrausChannel& channel);

namespace canonical {

NoncommGraph scalar(Index n = 2);   // C I_n
NoncommGraph identity_z();          // span{I, sigma_3}
NoncommGraph identity_xz();         // span{I, sigma_1, sigma_3}
NoncommGraph full(Index n = 2);     // L(C^n)
/// Graph of rho -> (1-p) rho + p sigma_2 rho sigma_2, 0 <= p <= 1.
NoncommGraph dephasing(double p);

/// The four qubit graph classes in order C I_2, span{I,Z}, span{I,X,Z},
/// L(C^2).
std::vector<NoncommGraph> qubit_graphs();
std::vector<std::string> qubit_graph_names();

}  // namespace canonical

}  // namespace zequa
