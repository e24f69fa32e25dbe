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
#include <limits>
#include <random>

#include "oracles.hpp"
#include "zequa/errors.hpp"
#include "zequa/matrix.hpp"

using namespace zequa;

namespace {

Matrix b_ij(Index n, Index i, Index j) {
  return matrix_unit(n, n, i, j) + matrix_unit(n, n, i + 1, j + 1);
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("hs_inner examples") {
  CHECK(hs_inner(identity(2), identity(2)) == Complex(2.0, 0.0));
  CHECK(std::abs(hs_inner(pauli::x(), pauli::z())) == 0.0);
  const Matrix e01 = matrix_unit(2, 2, 0, 1);
  CHECK(hs_inner(e01, e01) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(hs_inner(identity(2), identity(3)), Error);
}

TEST_CASE("hs_inner is conjugate symmetric and real on the diagonal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Index r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    const Matrix a = oracle::random_matrix(rng, r, c);
    const Matrix b = oracle::random_matrix(rng, r, c);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
    const Complex aa = hs_inner(a, a);
    CHECK(std::abs(aa.imag()) < 1e-12);
    CHECK(std::abs(aa.real() - a.norm() * a.norm()) < 1e-12 * std::max(1.0, aa.real()));
  }
}

TEST_CASE("kron examples") {
  CHECK((kron(identity(2), identity(2)) - identity(4)).norm() == 0.0);

  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(2, 2) = -1.0;
  CHECK((kron(pauli::z(), matrix_unit(2, 2, 0, 0)) - expected).norm() == 0.0);

  const Matrix k = kron(matrix_unit(2, 2, 0, 1), matrix_unit(2, 2, 1, 0));
  CHECK((k - oracle::loop_kron(matrix_unit(2, 2, 0, 1), matrix_unit(2, 2, 1, 0))).norm() == 0.0);
  CHECK(k(1, 2) == Complex(1.0, 0.0));
  CHECK(k.norm() == 1.0);
}

TEST_CASE("kron matches loop oracle and is associative") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 1 + trial % 3, 1 + (trial + 1) % 3);
    const Matrix b = oracle::random_matrix(rng, 1 + (trial + 2) % 3, 1 + trial % 2);
    const Matrix c = oracle::random_matrix(rng, 2, 1 + trial % 3);
    CHECK((kron(a, b) - oracle::loop_kron(a, b)).cwiseAbs().maxCoeff() == 0.0);
    const Matrix left = kron(kron(a, b), c);
    const Matrix right = kron(a, kron(b, c));
    CHECK((left - right).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("kron respects the size cap") {
  CHECK_THROWS_AS(kron(identity(65), identity(65)), Error);
  CHECK_THROWS_AS(kron(identity(3), identity(3), 8), Error);
  try {
    kron(identity(3), identity(3), 8);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size);
  }
  CHECK(kron(identity(64), identity(64)).rows() == 4096);
}

TEST_CASE("singular value examples") {
  const auto s2 = singular_values(pauli::y());
  REQUIRE(s2.size() == 2);
  CHECK(std::abs(s2[0] - 1.0) < 1e-14);
  CHECK(std::abs(s2[1] - 1.0) < 1e-14);

  const auto e = singular_values(matrix_unit(2, 2, 0, 1));
  CHECK(std::abs(e[0] - 1.0) < 1e-14);
  CHECK(std::abs(e[1]) < 1e-14);

  // B_01 on C^3: rows 0 and 1 are orthonormal, row 2 is zero, so the Gram of
  // the rows is diag(1, 1, 0).
  const Matrix b01 = b_ij(3, 0, 1);
  const Matrix gram = b01 * b01.adjoint();
  CHECK(std::abs(gram(0, 0) - 1.0) + std::abs(gram(1, 1) - 1.0) + std::abs(gram(2, 2)) == 0.0);
  const auto sb = singular_values(b01);
  REQUIRE(sb.size() == 3);
  CHECK(std::abs(sb[0] - 1.0) < 1e-14);
  CHECK(std::abs(sb[1] - 1.0) < 1e-14);
  CHECK(std::abs(sb[2]) < 1e-14);
}

TEST_CASE("singular values reject non-finite input") {
  Matrix m = identity(2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(singular_values(m), Error);
}

TEST_CASE("largest singular value equals the operator norm") {
  std::mt19937_64 rng(13);
  for (Index n = 2; n <= 8; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      const Matrix a = oracle::random_matrix(rng, n, n + rep - 1 > 0 ? n + rep - 1 : 1);
      const auto s = singular_values(a);
      CHECK(std::abs(s[0] - oracle::power_norm(a)) < 1e-10 * std::max(1.0, s[0]));
      for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k] <= s[k - 1]);
      CHECK(s.back() >= 0.0);
    }
}

TEST_CASE("orthonormalize examples") {
  const std::vector<Matrix> dep{identity(2), 2.0 * identity(2)};
  const auto one = orthonormalize(dep);
  REQUIRE(one.size() == 1);
  CHECK((one[0] - identity(2) / std::sqrt(2.0)).norm() < 1e-15);

  const std::vector<Matrix> iz{identity(2), pauli::z()};
  CHECK(orthonormalize(iz).size() == 2);

  std::vector<Matrix> bs;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (i != j) bs.push_back(b_ij(4, i, j));
  const auto ortho = orthonormalize(bs);
  CHECK(ortho.size() == oracle::exact_span_dim(bs));
  CHECK(ortho.size() == 6);

  CHECK(orthonormalize(std::vector<Matrix>{}).empty());
  CHECK_THROWS_AS(orthonormalize(iz, 0.0), Error);
  const std::vector<Matrix> mixed{identity(2), identity(3)};
  CHECK_THROWS_AS(orthonormalize(mixed), Error);
}

TEST_CASE("orthonormalize yields an orthonormal basis of the same span") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const Index r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
    const int count = 1 + trial % 7;
    std::vector<Matrix> mats;
    for (int k = 0; k < count; ++k) mats.push_back(oracle::random_matrix(rng, r, c));
    if (count > 2) mats.push_back(mats[0] - Complex(0.0, 2.0) * mats[1]);  // dependent
    const auto basis = orthonormalize(mats);
    CHECK(basis.size() == std::min<std::size_t>(count, r * c));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        CHECK(std::abs(hs_inner(basis[i], basis[j]) - (i == j ? 1.0 : 0.0)) < 1e-10);
    for (const Matrix& m : mats) {
      Matrix residual = m;
      for (const Matrix& e : basis) residual -= hs_inner(e, m) * e;
      CHECK(residual.norm() < 1e-10 * m.norm());
    }
  }
}

TEST_CASE("row-major vectorization round trip") {
  Matrix m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const Vector v = vectorize(m);
  for (Index k = 0; k < 6; ++k) CHECK(v(k) == Complex(static_cast<double>(k + 1), 0.0));
  CHECK((unvectorize(v, 2, 3) - m).norm() == 0.0);
}

TEST_CASE("state vectors are normalized") {
  Vector v(3);
  v << 3.0, Complex(0.0, 4.0), 0.0;
  const StateVector s(v);
  CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-12);
  CHECK(s[1] == Complex(0.0, 0.8));
  CHECK_THROWS_AS(StateVector(Vector::Zero(2)), Error);
}

}  // TEST_SUITE
