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

// Dense complex linear algebra shared by every module. Storage is Eigen's
// dynamic complex matrix; the helpers here fix the conventions the rest of
// the library relies on (Hilbert-Schmidt inner product, Kronecker index
// order, row-major vectorization).

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zequa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr std::size_t kDefaultMaxKronDim = 4096;

/// Tr[A^dagger B]. Throws Error(dimension) on shape mismatch.
Complex hs_inner(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);

/// Kronecker product; entry (i*rb + k, j*cb + l) = a(i,j) * b(k,l).
/// Throws Error(size) when either result dimension exceeds `max_dim`.
Matrix kron(const Matrix& a, const Matrix& b,
            std::size_t max_dim = kDefaultMaxKronDim);
Vector kron(const Vector& a, const Vector& b);

/// All min(rows, cols) singular values, descending.
std::vector<double> singular_values(const Matrix& a);

/// Hilbert-Schmidt orthonormal basis of span(mats), built by twice-applied
/// projection subtraction. An input whose residual falls below
/// tol * max input norm (floor 1e-12) is dropped.
std::vector<Matrix> orthonormalize(std::span<const Matrix> mats,
                                   double tol = 1e-10);

// Row-major stacking: vec(A)[i * cols + j] = A(i, j).
Vector vectorize(const Matrix& a);
Matrix unvectorize(const Vector& v, Index rows, Index cols);

Matrix identity(Index n);
Matrix matrix_unit(Index rows, Index cols, Index i, Index j);
Vector basis_vector(Index dim, Index i);

bool all_finite(const Matrix& a);

namespace pauli {
Matrix x();  // sigma_1
Matrix y();  // sigma_2
Matrix z();  // sigma_3
}  // namespace pauli

/// Unit-norm state. Construction normalizes; a zero or non-finite input
/// throws Error(numeric).
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);

  Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_(i); }

 private:
  Vector amplitudes_;
};

}  // namespace zequa
