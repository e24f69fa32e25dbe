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
#include "zequa/capacity.hpp"
#include "zequa/errors.hpp"

using namespace zequa;

namespace {

std::vector<Vector> amplitudes(const std::vector<StateVector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) out.push_back(v.amplitudes());
  return out;
}

// Residuals of a reported codebook, recomputed by explicit sums.
void check_codebook(const NoncommGraph& g, const Codebook& c) {
  const auto psi = amplitudes(c.vectors);
  CHECK(oracle::loop_graph_residual(g.space().basis(), psi) < 1e-8);
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j)
      CHECK(std::abs(psi[i].dot(psi[j]) - (i == j ? 1.0 : 0.0)) < 1e-10);
}

NoncommGraph ci2_t(int m) {
  return NoncommGraph(tensor(canonical::scalar(2).space(), family_t(m).t.space()));
}

}  // namespace

TEST_SUITE("capacity") {

TEST_CASE("verify_codebook examples") {
  const auto ci = canonical::scalar(2);
  const std::vector<StateVector> basis{StateVector(basis_vector(2, 0)),
                                       StateVector(basis_vector(2, 1))};
  const CodebookResiduals r = verify_codebook(ci, basis);
  CHECK(r.ortho < 1e-15);
  CHECK(r.graph < 1e-15);

  Vector plus(2), minus(2);
  plus << 1.0, 1.0;
  minus << 1.0, -1.0;
  const std::vector<StateVector> pm{StateVector(plus), StateVector(minus)};
  const CodebookResiduals rz = verify_codebook(canonical::identity_z(), pm);
  // Basis element sigma_3 / sqrt(2): <+|sigma_3|-> = 1.
  const double direct = std::abs(pm[0].amplitudes().dot(pauli::z() * pm[1].amplitudes()));
  CHECK(std::abs(direct - 1.0) < 1e-15);
  CHECK(std::abs(rz.graph - direct / std::sqrt(2.0)) < 1e-15);
  CHECK_FALSE(make_codebook(canonical::identity_z(), pm).valid());

  const FamilyInstance f = family_t(3);
  const CodebookResiduals rf = verify_codebook(ci2_t(3), f.codebook.vectors);
  CHECK(rf.ortho < 1e-12);
  CHECK(rf.graph < 1e-12);

  CHECK_THROWS_AS(verify_codebook(canonical::identity_z(), f.codebook.vectors), Error);
}

TEST_CASE("codebook_search examples") {
  const auto ci = canonical::scalar(2);
  const CodebookSearch a = codebook_search(ci, 2, {});
  REQUIRE(a.codebook);
  check_codebook(ci, *a.codebook);
  CHECK(a.best_penalty < kPenaltySuccess);

  const CodebookSearch b = codebook_search(canonical::identity_xz(), 2, {});
  CHECK_FALSE(b.codebook);
  CHECK(b.restarts_used == 256);
  CHECK(b.best_penalty > 1e-6);

  // Cold start: no warm vectors.
  const NoncommGraph g = ci2_t(3);
  const CodebookSearch c = codebook_search(g, 3, {});
  REQUIRE(c.codebook);
  check_codebook(g, *c.codebook);

  try {
    codebook_search(ci, 3, {});
    FAIL("m above ambient accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  CHECK_THROWS_AS(codebook_search(ci, 1, {}), Error);
}

TEST_CASE("alpha_lower examples") {
  const CapacityReport full = alpha_lower(canonical::full(2), {});
  CHECK(full.alpha_lower == 1);
  CHECK(full.bits_lower == 0.0);

  const CapacityReport iz = alpha_lower(canonical::identity_z(), {});
  CHECK(iz.alpha_lower == 2);
  CHECK(iz.method == Method::rank_one_certified);
  REQUIRE(iz.codebook);
  check_codebook(canonical::identity_z(), *iz.codebook);

  SearchConfig cfg;
  cfg.restarts = 16;
  const NoncommGraph g = ci2_t(3);
  const CapacityReport c = alpha_lower(g, cfg);
  CHECK(c.alpha_lower >= 3);
  REQUIRE(c.codebook);
  check_codebook(g, *c.codebook);
  CHECK(c.bits_lower == doctest::Approx(std::log2(static_cast<double>(c.alpha_lower))));
}

TEST_CASE("alpha_exact_qubit examples") {
  const CapacityReport ci = alpha_exact_qubit(canonical::scalar(2));
  CHECK(ci.alpha_exact == 2u);
  CHECK(ci.bits_lower == 1.0);
  CHECK(ci.method == Method::qubit_exact);

  const CapacityReport ixz = alpha_exact_qubit(canonical::identity_xz());
  CHECK(ixz.alpha_exact == 1u);
  CHECK(ixz.bits_lower == 0.0);

  const NoncommGraph deph = canonical::dephasing(0.3);
  const CapacityReport d = alpha_exact_qubit(deph);
  CHECK(d.alpha_exact == 2u);
  CHECK(d.bits_lower == 1.0);
  REQUIRE(d.codebook);
  // Codewords are the sigma_2 eigenvectors (|0> +- i|1>)/sqrt(2).
  for (const StateVector& v : d.codebook->vectors) {
    const Vector yv = pauli::y() * v.amplitudes();
    const Complex lambda = v.amplitudes().dot(yv);
    CHECK((yv - lambda * v.amplitudes()).norm() < 1e-12);
    CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-12);
  }
  check_codebook(deph, *d.codebook);

  CHECK_THROWS_AS(alpha_exact_qubit(canonical::scalar(3)), Error);
}

TEST_CASE("qubit consistency between search and classification") {
  for (const NoncommGraph& g : canonical::qubit_graphs()) {
    const CapacityReport exact = alpha_exact_qubit(g);
    const CapacityReport search = alpha_lower(g, {});
    CHECK(search.alpha_lower == *exact.alpha_exact);
    const bool positive = capacity_is_zero(g).verdict == ZeroCapacity::certified_positive;
    CHECK(positive == (*exact.alpha_exact >= 2));
    CHECK(positive == (search.alpha_lower >= 2));
  }
}

TEST_CASE("tensor power examples") {
  const TensorPowerReport zz = tensor_power_lower(canonical::identity_z(), 2, {});
  CHECK(zz.structural);
  CHECK(zz.report.alpha_exact == 4u);
  CHECK(zz.bits_per_use == 1.0);

  const TensorPowerReport ci = tensor_power_lower(canonical::scalar(2), 3, {});
  CHECK(ci.report.alpha_exact == 8u);
  CHECK(ci.ambient == 8);

  const TensorPowerReport full = tensor_power_lower(canonical::full(2), 2, {});
  CHECK(full.report.alpha_lower == 1);
  CHECK(full.report.alpha_exact == 1u);

  for (std::size_t k = 1; k <= 3; ++k) {
    const TensorPowerReport r = tensor_power_lower(canonical::identity_z(), k, {});
    CHECK(r.structural);
    CHECK(r.report.alpha_exact == (1u << k));
    CHECK(r.bits_per_use == 1.0);
  }

  try {
    tensor_power_lower(canonical::scalar(2), 7, {});
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size);
  }
}

TEST_CASE("dephasing tensor power uses the product warm start") {
  SearchConfig cfg;
  cfg.restarts = 8;
  const TensorPowerReport r = tensor_power_lower(canonical::dephasing(0.5), 2, cfg);
  CHECK_FALSE(r.structural);
  CHECK(r.report.alpha_lower == 4);
  CHECK(r.report.alpha_exact == 4u);
  CHECK(r.bits_per_use == 1.0);
}

TEST_CASE("more restarts never lose a codebook") {
  const NoncommGraph g = ci2_t(3);
  std::size_t previous = 0;
  for (std::size_t restarts : {1u, 4u, 16u}) {
    SearchConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = 5;
    const CapacityReport r = alpha_lower(g, cfg);
    CHECK(r.alpha_lower >= previous);
    previous = r.alpha_lower;
  }
}

TEST_CASE("alpha of a tensor pair is at least the product") {
  SearchConfig cfg;
  cfg.restarts = 16;
  const auto graphs = canonical::qubit_graphs();
  for (const NoncommGraph& a : graphs)
    for (const NoncommGraph& b : graphs) {
      const CapacityReport ra = capacity(a, cfg);
      const CapacityReport rb = capacity(b, cfg);
      const NoncommGraph ab(tensor(a.space(), b.space()));
      std::vector<StateVector> warm;
      if (ra.codebook && rb.codebook) warm = product_vectors(*ra.codebook, *rb.codebook);
      const CapacityReport rab = alpha_lower(ab, cfg, warm);
      CHECK(rab.alpha_lower >= ra.best_alpha() * rb.best_alpha());
    }
}

TEST_CASE("diagonal algebra recognition") {
  std::vector<Matrix> diag;
  for (Index t = 0; t < 3; ++t) diag.push_back(matrix_unit(3, 3, t, t));
  CHECK(is_diagonal_algebra(OperatorSubspace::from_spanning(diag)));
  CHECK_FALSE(is_diagonal_algebra(canonical::scalar(3).space()));
  const NoncommGraph g(OperatorSubspace::from_spanning(diag));
  const CapacityReport r = capacity(g, {});
  CHECK(r.alpha_exact == 3u);
}

}  // TEST_SUITE
