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

#include "zequa/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zequa/errors.hpp"

namespace zequa {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::size: return "size error";
    case ErrorKind::numeric: return "numeric error";
    case ErrorKind::channel: return "channel error";
    case ErrorKind::precondition: return "precondition error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::corrupt: return "corrupt corpus";
    case ErrorKind::io: return "io error";
    case ErrorKind::invalid_codeword: return "invalid codeword";
  }
  return "error";
}

namespace {

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::dimension,
                "hs_inner: shapes " + shape(a) + " and " + shape(b) + " differ");
  return a.conjugate().cwiseProduct(b).sum();
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

Matrix kron(const Matrix& a, const Matrix& b, std::size_t max_dim) {
  const auto rows = static_cast<std::size_t>(a.rows() * b.rows());
  const auto cols = static_cast<std::size_t>(a.cols() * b.cols());
  if (rows > max_dim || cols > max_dim)
    throw Error(ErrorKind::size, "kron: result " + std::to_string(rows) + "x" +
                                     std::to_string(cols) + " exceeds cap " +
                                     std::to_string(max_dim));
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

std::vector<double> singular_values(const Matrix& a) {
  if (!all_finite(a))
    throw Error(ErrorKind::numeric, "singular_values: non-finite entries");
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::vector<Matrix> orthonormalize(std::span<const Matrix> mats, double tol) {
  if (!(tol > 0.0))
    throw Error(ErrorKind::precondition, "orthonormalize: tol must be > 0");
  std::vector<Matrix> out;
  if (mats.empty()) return out;

  double max_norm = 0.0;
  for (const Matrix& m : mats) {
    if (m.rows() != mats.front().rows() || m.cols() != mats.front().cols())
      throw Error(ErrorKind::dimension, "orthonormalize: shapes " +
                                            shape(mats.front()) + " and " +
                                            shape(m) + " differ");
    max_norm = std::max(max_norm, m.norm());
  }
  const double cutoff = std::max(tol * max_norm, 1e-12);

  for (const Matrix& m : mats) {
    Matrix r = m;
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& q : out) r -= hs_inner(q, r) * q;
    const double norm = r.norm();
    if (norm < cutoff) continue;
    out.push_back(r / norm);
  }
  return out;
}

Vector vectorize(const Matrix& a) {
  Vector v(a.size());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Matrix unvectorize(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw Error(ErrorKind::dimension,
                "unvectorize: length " + std::to_string(v.size()) +
                    " does not match " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  Matrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Matrix matrix_unit(Index rows, Index cols, Index i, Index j) {
  Matrix m = Matrix::Zero(rows, cols);
  m(i, j) = 1.0;
  return m;
}

Vector basis_vector(Index dim, Index i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

bool all_finite(const Matrix& a) {
  for (Index k = 0; k < a.size(); ++k) {
    const Complex z = a.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

namespace pauli {

Matrix x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix y() {
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || norm == 0.0)
    throw Error(ErrorKind::numeric, "StateVector: zero or non-finite vector");
  amplitudes_ /= norm;
}

}  // namespace zequa
