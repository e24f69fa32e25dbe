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

#include "zequa/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zequa/errors.hpp"

namespace zequa {

OperatorSubspace::OperatorSubspace(Index rows, Index cols)
    : OperatorSubspace(rows, cols, {}) {}

OperatorSubspace::OperatorSubspace(Index rows, Index cols,
                                   std::vector<Matrix> basis)
    : rows_(rows), cols_(cols), basis_(std::move(basis)) {
  if (rows_ <= 0 || cols_ <= 0)
    throw Error(ErrorKind::dimension, "subspace ambient must be positive");
}

OperatorSubspace OperatorSubspace::from_spanning(std::span<const Matrix> mats,
                                                 double tol) {
  if (mats.empty())
    throw Error(ErrorKind::dimension, "from_spanning: empty spanning set");
  for (const Matrix& m : mats)
    if (!all_finite(m))
      throw Error(ErrorKind::numeric, "from_spanning: non-finite entries");
  auto basis = orthonormalize(mats, tol);
  return {mats.front().rows(), mats.front().cols(), std::move(basis)};
}

OperatorSubspace OperatorSubspace::from_orthonormal(Index rows, Index cols,
                                                    std::vector<Matrix> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != rows || basis[i].cols() != cols)
      throw Error(ErrorKind::dimension,
                  "basis element " + std::to_string(i) + " has wrong shape");
    if (!all_finite(basis[i]))
      throw Error(ErrorKind::numeric,
                  "basis element " + std::to_string(i) + " is not finite");
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = hs_inner(basis[i], basis[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > kSubspaceTol) {
        std::ostringstream msg;
        msg << "basis is not orthonormal: Gram entry (" << i << "," << j
            << ") deviates by " << std::abs(g - expected);
        throw Error(ErrorKind::precondition, msg.str());
      }
    }
  return {rows, cols, std::move(basis)};
}

Matrix OperatorSubspace::project(const Matrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw Error(ErrorKind::dimension, "project: shape does not match ambient");
  Matrix out = Matrix::Zero(rows_, cols_);
  for (const Matrix& e : basis_) out += hs_inner(e, m) * e;
  return out;
}

double OperatorSubspace::residual(const Matrix& m) const {
  return (m - project(m)).norm();
}

bool OperatorSubspace::contains(const Matrix& m, double tol) const {
  return residual(m) < tol * std::max(1.0, m.norm());
}

Matrix OperatorSubspace::frame() const {
  Matrix v(rows_ * cols_, static_cast<Index>(basis_.size()));
  for (std::size_t k = 0; k < basis_.size(); ++k)
    v.col(static_cast<Index>(k)) = vectorize(basis_[k]);
  return v;
}

Matrix OperatorSubspace::projector() const {
  const Matrix v = frame();
  return v * v.adjoint();
}

OperatorSubspace complement(const OperatorSubspace& s) {
  const Index n = s.rows() * s.cols();
  const auto d = static_cast<Index>(s.dim());
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n - d));
  if (d == 0) {
    for (Index i = 0; i < s.rows(); ++i)
      for (Index j = 0; j < s.cols(); ++j)
        basis.push_back(matrix_unit(s.rows(), s.cols(), i, j));
  } else {
    // The trailing columns of a full Householder Q span the orthogonal
    // complement of the frame's range.
    Eigen::HouseholderQR<Matrix> qr(s.frame());
    const Matrix q = qr.householderQ();
    for (Index k = d; k < n; ++k)
      basis.push_back(unvectorize(q.col(k), s.rows(), s.cols()));
  }
  return OperatorSubspace::from_orthonormal(s.rows(), s.cols(), std::move(basis));
}

OperatorSubspace tensor(const OperatorSubspace& s, const OperatorSubspace& t,
                        std::size_t max_ambient) {
  const auto rows = static_cast<std::size_t>(s.rows() * t.rows());
  const auto cols = static_cast<std::size_t>(s.cols() * t.cols());
  if (rows > max_ambient || cols > max_ambient)
    throw Error(ErrorKind::size, "tensor: ambient " + std::to_string(rows) +
                                     "x" + std::to_string(cols) +
                                     " exceeds cap " + std::to_string(max_ambient));
  std::vector<Matrix> basis;
  basis.reserve(s.dim() * t.dim());
  for (const Matrix& a : s.basis())
    for (const Matrix& b : t.basis()) basis.push_back(kron(a, b));
  return OperatorSubspace::from_orthonormal(s.rows() * t.rows(),
                                            s.cols() * t.cols(), std::move(basis));
}

OperatorSubspace conjugate(const OperatorSubspace& s) {
  std::vector<Matrix> basis;
  basis.reserve(s.dim());
  for (const Matrix& e : s.basis()) basis.push_back(e.conjugate());
  return OperatorSubspace::from_orthonormal(s.rows(), s.cols(), std::move(basis));
}

double projector_distance(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::dimension, "projector_distance: ambients differ");
  return (a.projector() - b.projector()).norm();
}

std::string GraphCheck::diagnostic() const {
  if (ok()) return "ok";
  std::ostringstream out;
  if (!dagger_closed)
    out << "not closed under adjoint (residual " << dagger_residual << ")";
  if (!contains_identity) {
    if (!dagger_closed) out << "; ";
    out << "identity not in span (residual " << identity_residual << ")";
  }
  return out.str();
}

GraphCheck check_noncomm_graph(const OperatorSubspace& s) {
  if (s.rows() != s.cols())
    throw Error(ErrorKind::dimension,
                "noncommutative graph needs a square ambient, got " +
                    std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
  GraphCheck check;
  for (const Matrix& e : s.basis())
    check.dagger_residual = std::max(check.dagger_residual, s.residual(e.adjoint()));
  check.identity_residual = s.residual(identity(s.rows()));
  check.dagger_closed = check.dagger_residual < kSubspaceTol;
  check.contains_identity = check.identity_residual < kSubspaceTol;
  return check;
}

NoncommGraph::NoncommGraph(OperatorSubspace space) : space_(std::move(space)) {
  const GraphCheck check = check_noncomm_graph(space_);
  if (!check.ok())
    throw Error(ErrorKind::precondition,
                "not a noncommutative graph: " + check.diagnostic());
}

NoncommGraph from_kraus(const KrausChannel& channel) {
  if (channel.kraus.empty())
    throw Error(ErrorKind::channel, "from_kraus: no Kraus operators");
  const Index n = channel.kraus.front().rows();
  Matrix completeness = Matrix::Zero(n, n);
  for (const Matrix& e : channel.kraus) {
    if (e.rows() != n || e.cols() != n)
      throw Error(ErrorKind::dimension, "from_kraus: Kraus operators must be n x n");
    completeness += e.adjoint() * e;
  }
  const double defect = (completeness - identity(n)).norm();
  if (!(defect < 1e-10)) {
    std::ostringstream msg;
    msg << "Kraus set is not trace preserving: |sum E^dagger E - I| = " << defect;
    throw Error(ErrorKind::channel, msg.str());
  }
  std::vector<Matrix> products;
  products.reserve(channel.kraus.size() * channel.kraus.size());
  for (const Matrix& ei : channel.kraus)
    for (const Matrix& ej : channel.kraus) products.push_back(ei.adjoint() * ej);
  return NoncommGraph(OperatorSubspace::from_spanning(products));
}

namespace canonical {

NoncommGraph scalar(Index n) {
  const Matrix id = identity(n);
  return NoncommGraph(OperatorSubspace::from_spanning({&id, 1}));
}

NoncommGraph identity_z() {
  const std::vector<Matrix> span{identity(2), pauli::z()};
  return NoncommGraph(OperatorSubspace::from_spanning(span));
}

NoncommGraph identity_xz() {
  const std::vector<Matrix> span{identity(2), pauli::x(), pauli::z()};
  return NoncommGraph(OperatorSubspace::from_spanning(span));
}

NoncommGraph full(Index n) {
  return NoncommGraph(complement(OperatorSubspace(n, n)));
}

NoncommGraph dephasing(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::precondition, "dephasing: p must lie in [0, 1]");
  KrausChannel channel;
  channel.kraus.push_back(std::sqrt(1.0 - p) * identity(2));
  channel.kraus.push_back(std::sqrt(p) * pauli::y());
  return from_kraus(channel);
}

std::vector<NoncommGraph> qubit_graphs() {
  return {scalar(2), identity_z(), identity_xz(), full(2)};
}

std::vector<std::string> qubit_graph_names() {
  return {"pauli:I2", "pauli:I-Z", "pauli:I-X-Z", "full:2"};
}

}  // namespace canonical

}  // namespace zequa
