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

#include "zequa/rankone.hpp"

#include <cmath>
#include <limits>

#include "zequa/errors.hpp"

namespace zequa {

const char* to_string(Verdict v) noexcept {
  return v == Verdict::found ? "found" : "not_found";
}

const char* to_string(ZeroCapacity z) noexcept {
  return z == ZeroCapacity::certified_positive ? "certified_positive"
                                               : "likely_zero";
}

Matrix RankOneCertificate::combine(const OperatorSubspace& s) const {
  if (coeffs.size() != s.dim())
    throw Error(ErrorKind::dimension, "certificate length does not match subspace");
  Matrix m = Matrix::Zero(s.rows(), s.cols());
  for (std::size_t k = 0; k < coeffs.size(); ++k) m += coeffs[k] * s.basis()[k];
  return m;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigma_ratio(const Matrix& m) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv[0] == 0.0) return kInf;
  return sv.size() < 2 ? 0.0 : sv[1] / sv[0];
}

Vector top_eigenvector(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
  return eig.eigenvectors().col(hermitian.rows() - 1);
}

// Basis stacked vertically, and the stack of adjoints, so that all E_k y and
// E_k^dagger x come out of a single product.
struct StackedBasis {
  explicit StackedBasis(const OperatorSubspace& s)
      : rows(s.rows()), cols(s.cols()), dim(static_cast<Index>(s.dim())),
        forward(rows * dim, cols), adjoint(cols * dim, rows) {
    for (Index k = 0; k < dim; ++k) {
      forward.block(k * rows, 0, rows, cols) = s.basis()[k];
      adjoint.block(k * cols, 0, cols, rows) = s.basis()[k].adjoint();
    }
  }

  // Columns E_k y.
  Matrix apply(const Vector& y) const {
    const Vector all = forward * y;
    return Eigen::Map<const Matrix>(all.data(), rows, dim);
  }
  // Columns E_k^dagger x.
  Matrix apply_adjoint(const Vector& x) const {
    const Vector all = adjoint * x;
    return Eigen::Map<const Matrix>(all.data(), cols, dim);
  }
  // c_k = <E_k, x y^dagger> = conj(x^dagger E_k y).
  Vector coefficients(const Vector& x, const Vector& y) const {
    return (x.adjoint() * apply(y)).adjoint();
  }

  Index rows, cols, dim;
  Matrix forward;
  Matrix adjoint;
};

struct Attempt {
  double ratio = kInf;
  Vector coeffs;
};

Matrix combine(const OperatorSubspace& s, const Vector& c) {
  Matrix m = Matrix::Zero(s.rows(), s.cols());
  for (Index k = 0; k < c.size(); ++k) m += c(k) * s.basis()[static_cast<std::size_t>(k)];
  return m;
}

Attempt alternate(const OperatorSubspace& s, const StackedBasis& stack,
                  std::uint64_t seed, std::size_t max_iters) {
  std::mt19937_64 rng(seed);
  Vector c = random_complex_normal(rng, stack.dim);
  c.normalize();

  Eigen::JacobiSVD<Matrix> svd(combine(s, c), Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector x = svd.matrixU().col(0);
  Vector y = svd.matrixV().col(0);

  Attempt best;
  double checkpoint = kInf;
  constexpr std::size_t kCheckEvery = 10;
  constexpr std::size_t kMinIters = 50;
  for (std::size_t it = 1; it <= max_iters; ++it) {
    const Matrix w = stack.apply(y);
    x = top_eigenvector(w * w.adjoint());
    const Matrix z = stack.apply_adjoint(x);
    y = top_eigenvector(z * z.adjoint());

    if (it % kCheckEvery != 0 && it != max_iters) continue;
    Vector coeffs = stack.coefficients(x, y);
    coeffs.normalize();
    const double ratio = sigma_ratio(combine(s, coeffs));
    if (ratio < best.ratio) best = {ratio, std::move(coeffs)};
    if (best.ratio < 1e-14) break;
    if (it >= kMinIters && best.ratio > (1.0 - 1e-3) * checkpoint) break;
    checkpoint = best.ratio;
  }
  if (best.coeffs.size() == 0) {
    best.coeffs = stack.coefficients(x, y).normalized();
    best.ratio = sigma_ratio(combine(s, best.coeffs));
  }
  return best;
}

std::optional<RankOneCertificate> make_certificate(const OperatorSubspace& s,
                                                   const Vector& coeffs) {
  const Matrix m = combine(s, coeffs);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return std::nullopt;
  RankOneCertificate cert{
      std::vector<Complex>(coeffs.data(), coeffs.data() + coeffs.size()),
      StateVector(svd.matrixU().col(0)), StateVector(svd.matrixV().col(0)),
      sv.size() < 2 ? 0.0 : sv(1) / sv(0)};
  return cert;
}

}  // namespace

bool verify_certificate(const OperatorSubspace& s, const RankOneCertificate& cert) {
  const Matrix m = cert.combine(s);
  const auto sv = singular_values(m);
  if (sv.empty() || !(sv[0] > 0.0)) return false;
  const double ratio = sv.size() < 2 ? 0.0 : sv[1] / sv[0];
  if (!(ratio < 1e-6)) return false;
  if (!s.contains(m, 1e-8)) return false;
  const Matrix outer =
      sv[0] * cert.left.amplitudes() * cert.right.amplitudes().adjoint();
  return (m - outer).norm() / sv[0] < 1e-6;
}

RankOneResult find_rank_one(const OperatorSubspace& s, const SearchConfig& cfg) {
  cfg.validate();
  RankOneResult result;
  result.seed = cfg.seed;
  if (s.dim() == 0) {
    result.best_ratio = kInf;
    return result;
  }

  const StackedBasis stack(s);
  const std::function<Attempt(std::size_t)> attempt = [&](std::size_t r) {
    return alternate(s, stack, restart_seed(cfg.seed, r), cfg.max_iters);
  };
  const std::function<bool(const Attempt&)> done = [&](const Attempt& a) {
    return a.ratio < cfg.tol;
  };
  const auto attempts = run_restarts(cfg.restarts, attempt, done);

  std::size_t best = 0;
  for (std::size_t r = 1; r < attempts.size(); ++r)
    if (attempts[r].ratio < attempts[best].ratio) best = r;
  result.restarts_used = attempts.size();
  result.best_ratio = attempts[best].ratio;

  if (result.best_ratio < cfg.tol) {
    auto cert = make_certificate(s, attempts[best].coeffs);
    if (cert && cert->sigma_ratio < cfg.tol && verify_certificate(s, *cert)) {
      result.verdict = Verdict::found;
      result.certificate = std::move(cert);
    }
  }
  return result;
}

RankOneResult rank_one_exact_1d(const OperatorSubspace& s) {
  if (s.dim() != 1)
    throw Error(ErrorKind::precondition,
                "rank_one_exact_1d needs a one-dimensional subspace, got dim " +
                    std::to_string(s.dim()));
  RankOneResult result;
  Vector coeffs(1);
  coeffs(0) = 1.0;
  auto cert = make_certificate(s, coeffs);
  result.best_ratio = cert ? cert->sigma_ratio : kInf;
  if (cert && cert->sigma_ratio < 1e-10) {
    result.verdict = Verdict::found;
    result.certificate = std::move(cert);
  }
  return result;
}

ZeroCapacityEvidence capacity_is_zero(const NoncommGraph& g, const SearchConfig& cfg) {
  const OperatorSubspace perp = complement(g.space());
  ZeroCapacityEvidence evidence;
  evidence.complement_dim = perp.dim();
  evidence.search = find_rank_one(perp, cfg);
  evidence.verdict = evidence.search.verdict == Verdict::found
                         ? ZeroCapacity::certified_positive
                         : ZeroCapacity::likely_zero;
  return evidence;
}

}  // namespace zequa
