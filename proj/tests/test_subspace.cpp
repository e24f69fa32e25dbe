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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zequa/activation.hpp"
#include "zequa/errors.hpp"
#include "zequa/subspace.hpp"

using namespace zequa;

namespace {

OperatorSubspace span_of(std::vector<Matrix> mats) {
  return OperatorSubspace::from_spanning(mats);
}

OperatorSubspace random_subspace(std::mt19937_64& rng, Index r, Index c, std::size_t d) {
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < d; ++k) mats.push_back(oracle::random_matrix(rng, r, c));
  return span_of(mats);
}

// Kraus operators from the blocks of a random isometry C^n -> C^{nk}.
KrausChannel random_channel(std::mt19937_64& rng, Index n, Index k) {
  const Matrix g = oracle::random_matrix(rng, n * k, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix v = Matrix(qr.householderQ()).leftCols(n);
  KrausChannel ch;
  for (Index b = 0; b < k; ++b) ch.kraus.push_back(v.block(b * n, 0, n, n));
  return ch;
}

Matrix b_ij(Index n, Index i, Index j) {
  return matrix_unit(n, n, i, j) + matrix_unit(n, n, i + 1, j + 1);
}

}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("from_spanning examples") {
  CHECK(span_of({identity(2)}).dim() == 1);
  CHECK(span_of({identity(2), pauli::z(), 3.0 * pauli::z()}).dim() == 2);

  std::vector<Matrix> bs;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (i != j) bs.push_back(b_ij(4, i, j));
  CHECK(span_of(bs).dim() == oracle::exact_span_dim(bs));
  CHECK(span_of(bs).dim() == 6);

  CHECK_THROWS_AS(span_of({identity(2), identity(3)}), Error);
  CHECK_THROWS_AS(span_of({}), Error);
}

TEST_CASE("from_kraus examples") {
  const NoncommGraph id = from_kraus({{identity(2)}});
  CHECK(id.space().dim() == 1);
  CHECK(id.space().contains(identity(2)));

  const NoncommGraph deph = canonical::dephasing(0.3);
  CHECK(deph.space().dim() == 2);
  CHECK(projector_distance(deph.space(), span_of({identity(2), pauli::y()})) < 1e-12);

  const KrausChannel depol{{0.5 * identity(2), 0.5 * pauli::x(), 0.5 * pauli::y(),
                            0.5 * pauli::z()}};
  std::vector<Matrix> products;
  for (const Matrix& a : depol.kraus)
    for (const Matrix& b : depol.kraus) products.push_back(a.adjoint() * b);
  CHECK(oracle::exact_span_dim(products) == 4);
  CHECK(from_kraus(depol).space().dim() == 4);

  try {
    from_kraus({{identity(2), identity(2)}});
    FAIL("incomplete Kraus set accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::channel);
  }
  CHECK_THROWS_AS(canonical::dephasing(1.5), Error);
}

TEST_CASE("from_kraus always yields a noncommutative graph") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 3, k = 1 + trial % 4;
    const NoncommGraph g = from_kraus(random_channel(rng, n, k));
    CHECK(check_noncomm_graph(g.space()).ok());
  }
}

TEST_CASE("complement examples") {
  const OperatorSubspace c = complement(canonical::scalar(2).space());
  CHECK(c.dim() == 3);
  CHECK(projector_distance(c, span_of({pauli::x(), pauli::y(), pauli::z()})) < 1e-12);

  const OperatorSubspace cxz = complement(canonical::identity_xz().space());
  CHECK(cxz.dim() == 1);
  CHECK(projector_distance(cxz, span_of({pauli::y()})) < 1e-12);

  const FamilyInstance f = family_t(3);
  CHECK(projector_distance(complement(f.t.space()), span_of(f.spanning_complement)) < 1e-10);

  CHECK(complement(OperatorSubspace(2, 3)).dim() == 6);
  CHECK(complement(canonical::full(2).space()).dim() == 0);
}

TEST_CASE("complement dimensions add up and are orthogonal") {
  std::mt19937_64 rng(22);
  for (Index n = 2; n <= 5; ++n)
    for (std::size_t d = 1; d <= static_cast<std::size_t>(n * n); d += n) {
      const OperatorSubspace s = random_subspace(rng, n, n, d);
      const OperatorSubspace c = complement(s);
      CHECK(s.dim() + c.dim() == static_cast<std::size_t>(n * n));
      for (const Matrix& a : s.basis())
        for (const Matrix& b : c.basis()) CHECK(std::abs(hs_inner(a, b)) < 1e-10);
      CHECK(projector_distance(complement(c), s) < 1e-9);
    }
}

TEST_CASE("tensor examples") {
  const OperatorSubspace ci4 = tensor(canonical::scalar(2).space(), canonical::scalar(2).space());
  CHECK(projector_distance(ci4, canonical::scalar(4).space()) < 1e-12);

  const OperatorSubspace zz = tensor(canonical::identity_z().space(), canonical::identity_z().space());
  std::vector<Matrix> diag;
  for (Index t = 0; t < 4; ++t) diag.push_back(matrix_unit(4, 4, t, t));
  CHECK(projector_distance(zz, span_of(diag)) < 1e-12);

  const OperatorSubspace ct = tensor(canonical::scalar(2).space(), family_t(3).t.space());
  CHECK(ct.dim() == 10);
  CHECK(ct.rows() == 8);

  try {
    tensor(canonical::full(8).space(), canonical::full(9).space());
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size);
  }
}

TEST_CASE("tensor projector is the Kronecker product of projectors") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 2, m = 1 + trial % 3;
    const OperatorSubspace s = random_subspace(rng, n, n, 1 + trial % 4);
    const OperatorSubspace t = random_subspace(rng, m, m, 1 + trial % (m * m));
    const OperatorSubspace st = tensor(s, t);
    CHECK(st.dim() == s.dim() * t.dim());
    // With row-major vectorization, vec(A (x) B) is a fixed permutation of
    // vec(A) (x) vec(B); compare projectors through that permutation.
    const Index N = n * n * m * m;
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(N);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < m; ++k)
          for (Index l = 0; l < m; ++l)
            perm.indices()((i * n + j) * m * m + k * m + l) =
                static_cast<int>((i * m + k) * n * m + j * m + l);
    const Matrix expected = kron(s.projector(), t.projector(), 4096);
    const Matrix actual = perm.transpose() * st.projector() * perm;
    CHECK((expected - actual).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("contains examples") {
  const OperatorSubspace ci = canonical::scalar(2).space();
  CHECK(ci.contains(5.0 * identity(2)));
  CHECK_FALSE(ci.contains(pauli::z()));
  const OperatorSubspace t3 = family_t(3).t.space();
  for (Index j = 1; j <= 3; ++j) {
    Matrix d = Matrix::Zero(4, 4);
    for (Index k = 0; k <= 3 - j; ++k) d(k, j + k) = (k % 2 == 0) ? 1.0 : -1.0;
    CHECK(t3.contains(d));
  }
}

TEST_CASE("a nonzero matrix is never in both a subspace and its complement") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + trial % 3;
    const OperatorSubspace s = random_subspace(rng, n, n, 1 + trial % (n * n - 1));
    const OperatorSubspace c = complement(s);
    const Matrix m = oracle::random_matrix(rng, n, n) * std::pow(10.0, trial % 5 - 2);
    CHECK_FALSE((s.contains(m, 1e-10) && c.contains(m, 1e-10)));
    CHECK(s.contains(s.project(m), 1e-10));
  }
}

TEST_CASE("noncommutative graph check examples") {
  CHECK(check_noncomm_graph(span_of({identity(2), pauli::z()})).ok());

  const GraphCheck no_id = check_noncomm_graph(span_of({pauli::z()}));
  CHECK_FALSE(no_id.ok());
  CHECK(no_id.dagger_closed);
  CHECK_FALSE(no_id.contains_identity);
  CHECK(no_id.diagnostic().find("identity") != std::string::npos);

  const GraphCheck no_dag =
      check_noncomm_graph(span_of({identity(2), matrix_unit(2, 2, 0, 1)}));
  CHECK_FALSE(no_dag.dagger_closed);
  CHECK(no_dag.contains_identity);
  CHECK(no_dag.diagnostic().find("adjoint") != std::string::npos);

  CHECK_THROWS_AS(check_noncomm_graph(OperatorSubspace(2, 3)), Error);
  CHECK_THROWS_AS(NoncommGraph(span_of({pauli::z()})), Error);
}

TEST_CASE("conjugate examples") {
  const OperatorSubspace ci = canonical::scalar(2).space();
  CHECK(projector_distance(conjugate(ci), ci) < 1e-15);
  const OperatorSubspace y = span_of({pauli::y()});
  CHECK(projector_distance(conjugate(y), y) < 1e-15);

  Matrix m = matrix_unit(2, 2, 0, 1);
  m(1, 0) = Complex(0.0, 1.0);
  Matrix mbar = matrix_unit(2, 2, 0, 1);
  mbar(1, 0) = Complex(0.0, -1.0);
  CHECK(projector_distance(conjugate(span_of({m})), span_of({mbar})) < 1e-15);
  CHECK(projector_distance(conjugate(span_of({m})), span_of({m})) > 0.5);

  std::mt19937_64 rng(25);
  const OperatorSubspace r = random_subspace(rng, 3, 2, 3);
  CHECK(projector_distance(conjugate(conjugate(r)), r) < 1e-14);
}

TEST_CASE("from_orthonormal rejects a non-orthonormal basis") {
  try {
    OperatorSubspace::from_orthonormal(2, 2, {identity(2)});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("canonical qubit graphs") {
  const auto graphs = canonical::qubit_graphs();
  REQUIRE(graphs.size() == 4);
  CHECK(graphs[0].space().dim() == 1);
  CHECK(graphs[1].space().dim() == 2);
  CHECK(graphs[2].space().dim() == 3);
  CHECK(graphs[3].space().dim() == 4);
}

}  // TEST_SUITE
