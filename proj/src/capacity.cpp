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

#include "zequa/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zequa/errors.hpp"
#include "zequa/rankone.hpp"

namespace zequa {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::qubit_exact: return "qubit_exact";
    case Method::rank_one_certified: return "rank_one_certified";
    case Method::search: return "search";
    case Method::trivial: return "trivial";
  }
  return "unknown";
}

CodebookResiduals verify_codebook(const OperatorSubspace& graph,
                                  std::span<const StateVector> vectors) {
  for (const StateVector& v : vectors)
    if (v.dim() != graph.rows() || graph.rows() != graph.cols())
      throw Error(ErrorKind::dimension,
                  "verify_codebook: vector of dim " + std::to_string(v.dim()) +
                      " against ambient " + std::to_string(graph.rows()) + "x" +
                      std::to_string(graph.cols()));
  CodebookResiduals res;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Vector& psi = vectors[i].amplitudes();
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const Vector& phi = vectors[j].amplitudes();
      const Complex overlap = psi.dot(phi);
      res.ortho = std::max(res.ortho, std::abs(overlap - (i == j ? 1.0 : 0.0)));
      if (i == j) continue;
      for (const Matrix& a : graph.basis())
        res.graph = std::max(res.graph, std::abs(psi.dot(a * phi)));
    }
  }
  return res;
}

CodebookResiduals verify_codebook(const NoncommGraph& graph,
                                  std::span<const StateVector> vectors) {
  return verify_codebook(graph.space(), vectors);
}

Codebook make_codebook(const NoncommGraph& graph, std::vector<StateVector> vectors) {
  const CodebookResiduals res = verify_codebook(graph, vectors);
  return Codebook{graph.dim(), std::move(vectors), res.ortho, res.graph};
}

std::vector<StateVector> product_vectors(const Codebook& a, const Codebook& b) {
  std::vector<StateVector> out;
  out.reserve(a.size() * b.size());
  for (const StateVector& u : a.vectors)
    for (const StateVector& v : b.vectors)
      out.emplace_back(kron(u.amplitudes(), v.amplitudes()));
  return out;
}

namespace {

using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Parameters: psi_i = x[2n i, 2n i + n) + i * x[2n i + n, 2n (i + 1)).
class CodebookProblem {
 public:
  CodebookProblem(const OperatorSubspace& graph, std::size_t m)
      : n_(graph.rows()), m_(static_cast<Index>(m)),
        d_(static_cast<Index>(graph.dim())),
        stacked_(n_ * d_, n_), stacked_adjoint_(n_ * d_, n_) {
    for (Index k = 0; k < d_; ++k) {
      stacked_.block(k * n_, 0, n_, n_) = graph.basis()[static_cast<std::size_t>(k)];
      stacked_adjoint_.block(k * n_, 0, n_, n_) =
          graph.basis()[static_cast<std::size_t>(k)].adjoint();
    }
  }

  Index parameters() const { return 2 * n_ * m_; }

  std::vector<Vector> unpack(const RealVector& x) const {
    std::vector<Vector> psi(static_cast<std::size_t>(m_));
    for (Index i = 0; i < m_; ++i) {
      Vector v(n_);
      for (Index p = 0; p < n_; ++p)
        v(p) = Complex{x(2 * n_ * i + p), x(2 * n_ * i + n_ + p)};
      psi[static_cast<std::size_t>(i)] = std::move(v);
    }
    return psi;
  }

  RealVector pack(const std::vector<Vector>& psi) const {
    RealVector x(parameters());
    for (Index i = 0; i < m_; ++i)
      for (Index p = 0; p < n_; ++p) {
        x(2 * n_ * i + p) = psi[static_cast<std::size_t>(i)](p).real();
        x(2 * n_ * i + n_ + p) = psi[static_cast<std::size_t>(i)](p).imag();
      }
    return x;
  }

  void normalize(RealVector& x) const {
    for (Index i = 0; i < m_; ++i) {
      auto block = x.segment(2 * n_ * i, 2 * n_);
      const double norm = block.norm();
      if (norm > 0.0) block /= norm;
    }
  }

  // Columns A_k v, k = 0..d-1.
  Matrix apply(const Vector& v) const {
    const Vector all = stacked_ * v;
    return Eigen::Map<const Matrix>(all.data(), n_, d_);
  }
  Matrix apply_adjoint(const Vector& v) const {
    const Vector all = stacked_adjoint_ * v;
    return Eigen::Map<const Matrix>(all.data(), n_, d_);
  }

  double penalty(const RealVector& x) const {
    const auto psi = unpack(x);
    double f = 0.0;
    for (Index j = 0; j < m_; ++j) {
      const Matrix y = apply(psi[static_cast<std::size_t>(j)]);
      for (Index i = 0; i < m_; ++i) {
        if (i == j) continue;
        f += (psi[static_cast<std::size_t>(i)].adjoint() * y).squaredNorm();
      }
    }
    for (Index i = 0; i < m_; ++i)
      for (Index j = i; j < m_; ++j) {
        const Complex g = psi[static_cast<std::size_t>(i)].dot(psi[static_cast<std::size_t>(j)]);
        f += std::norm(g - (i == j ? 1.0 : 0.0));
      }
    return f;
  }

  // Penalty, gradient J^T r and Gauss-Newton matrix J^T J. The Jacobian of
  // each pair (i, j) touches only the blocks of psi_i and psi_j, so it is
  // accumulated blockwise.
  double linearize(const RealVector& x, RealVector& grad, RealMatrix& gn) const {
    const auto psi = unpack(x);
    const Index b = 2 * n_;
    grad.setZero(parameters());
    gn.setZero(parameters(), parameters());
    double f = 0.0;

    std::vector<Matrix> forward, backward;
    for (const Vector& v : psi) {
      forward.push_back(apply(v));
      backward.push_back(apply_adjoint(v));
    }

    auto accumulate = [&](Index i, Index j, const Matrix& y, const Matrix& w_conj,
                          const Eigen::VectorXcd& z) {
      // y: columns of d(z)/d(a_i); w_conj: columns of d(z)/d(a_j).
      const Index rows = z.size();
      RealMatrix li(2 * rows, b), lj(2 * rows, b);
      li << y.transpose().real(), y.transpose().imag(),
            y.transpose().imag(), -y.transpose().real();
      lj << w_conj.transpose().real(), -w_conj.transpose().imag(),
            w_conj.transpose().imag(), w_conj.transpose().real();
      RealVector r(2 * rows);
      r << z.real(), z.imag();
      f += r.squaredNorm();
      grad.segment(b * i, b) += li.transpose() * r;
      grad.segment(b * j, b) += lj.transpose() * r;
      gn.block(b * i, b * i, b, b) += li.transpose() * li;
      gn.block(b * j, b * j, b, b) += lj.transpose() * lj;
      const RealMatrix cross = li.transpose() * lj;
      gn.block(b * i, b * j, b, b) += cross;
      gn.block(b * j, b * i, b, b) += cross.transpose();
    };

    for (Index i = 0; i < m_; ++i)
      for (Index j = 0; j < m_; ++j) {
        if (i == j) continue;
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
        const Eigen::VectorXcd z = (psi[si].adjoint() * forward[sj]).transpose();
        accumulate(i, j, forward[sj], backward[si].conjugate(), z);
      }
    for (Index i = 0; i < m_; ++i)
      for (Index j = i + 1; j < m_; ++j) {
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
        Eigen::VectorXcd z(1);
        z(0) = psi[si].dot(psi[sj]);
        accumulate(i, j, psi[sj], psi[si].conjugate(), z);
      }
    for (Index i = 0; i < m_; ++i) {
      const auto block = x.segment(b * i, b);
      const double r = block.squaredNorm() - 1.0;
      const RealVector l = 2.0 * block;
      f += r * r;
      grad.segment(b * i, b) += l * r;
      gn.block(b * i, b * i, b, b) += l * l.transpose();
    }
    return f;
  }

 private:
  Index n_, m_, d_;
  Matrix stacked_;
  Matrix stacked_adjoint_;
};

struct Attempt {
  double penalty = std::numeric_limits<double>::infinity();
  std::vector<Vector> vectors;
  bool success = false;
};

// Levenberg-Marquardt with renormalization after each accepted step.
double minimize(const CodebookProblem& problem, RealVector& x, std::size_t max_iters) {
  problem.normalize(x);
  RealVector grad, trial;
  RealMatrix gn;
  double f = problem.linearize(x, grad, gn);
  double mu = 1e-3 * std::max(1.0, gn.diagonal().maxCoeff());
  double checkpoint = f;
  constexpr std::size_t kCheckEvery = 20;
  constexpr double kConverged = 1e-26;

  for (std::size_t it = 1; it <= max_iters && f > kConverged; ++it) {
    RealMatrix lhs = gn;
    lhs.diagonal().array() += mu;
    const RealVector step = lhs.ldlt().solve(-grad);
    trial = x + step;
    problem.normalize(trial);
    const double f_trial = problem.penalty(trial);
    if (f_trial < f) {
      x = trial;
      f = problem.linearize(x, grad, gn);
      mu = std::max(mu / 3.0, 1e-15);
    } else {
      mu *= 4.0;
      if (mu > 1e12) break;
    }
    if (it % kCheckEvery == 0) {
      if (f > kPenaltySuccess && checkpoint - f < 1e-4 * checkpoint) break;
      checkpoint = f;
    }
  }
  return f;
}

}  // namespace

CodebookSearch codebook_search(const NoncommGraph& graph, std::size_t m,
                               const SearchConfig& cfg,
                               std::span<const StateVector> warm_start) {
  cfg.validate();
  const Index n = graph.dim();
  if (m < 2 || m > static_cast<std::size_t>(n))
    throw Error(ErrorKind::precondition,
                "codebook_search: m = " + std::to_string(m) +
                    " outside [2, " + std::to_string(n) + "]");
  for (const StateVector& v : warm_start)
    if (v.dim() != n)
      throw Error(ErrorKind::dimension, "codebook_search: warm start dimension mismatch");

  const CodebookProblem problem(graph.space(), m);
  const std::function<Attempt(std::size_t)> attempt = [&](std::size_t r) {
    std::mt19937_64 rng(restart_seed(cfg.seed, r));
    std::vector<Vector> init;
    for (std::size_t i = 0; i < m; ++i) {
      if (r == 0 && i < warm_start.size())
        init.push_back(warm_start[i].amplitudes());
      else
        init.push_back(random_complex_normal(rng, n));
    }
    RealVector x = problem.pack(init);
    Attempt a;
    a.penalty = minimize(problem, x, cfg.max_iters);
    a.vectors = problem.unpack(x);
    if (a.penalty < kPenaltySuccess) {
      std::vector<StateVector> states;
      for (const Vector& v : a.vectors) states.emplace_back(v);
      const CodebookResiduals res = verify_codebook(graph, states);
      a.success = res.ortho < kOrthoThreshold && res.graph < kGraphThreshold;
    }
    return a;
  };
  const std::function<bool(const Attempt&)> done = [](const Attempt& a) {
    return a.success;
  };
  const auto attempts = run_restarts(cfg.restarts, attempt, done);

  CodebookSearch out;
  out.restarts_used = attempts.size();
  out.best_penalty = std::numeric_limits<double>::infinity();
  for (const Attempt& a : attempts) out.best_penalty = std::min(out.best_penalty, a.penalty);
  if (attempts.back().success) {
    std::vector<StateVector> states;
    for (const Vector& v : attempts.back().vectors) states.emplace_back(v);
    out.codebook = make_codebook(graph, std::move(states));
    out.best_penalty = attempts.back().penalty;
  }
  return out;
}

namespace {

std::vector<StateVector> computational_basis(Index n) {
  std::vector<StateVector> out;
  for (Index t = 0; t < n; ++t) out.emplace_back(basis_vector(n, t));
  return out;
}

void set_alpha(CapacityReport& report, std::size_t alpha) {
  report.alpha_lower = alpha;
  report.bits_lower = std::log2(static_cast<double>(alpha));
}

CapacityReport exact_report(const NoncommGraph& graph, std::size_t alpha,
                            Method method, std::string note) {
  CapacityReport report;
  set_alpha(report, alpha);
  report.alpha_exact = alpha;
  report.method = method;
  report.note = std::move(note);
  if (alpha == static_cast<std::size_t>(graph.dim()) && alpha >= 2)
    report.codebook = make_codebook(graph, computational_basis(graph.dim()));
  return report;
}

}  // namespace

bool is_diagonal_algebra(const OperatorSubspace& s) {
  if (s.rows() != s.cols() || s.dim() != static_cast<std::size_t>(s.rows())) return false;
  for (Index t = 0; t < s.rows(); ++t)
    if (!s.contains(matrix_unit(s.rows(), s.cols(), t, t))) return false;
  return true;
}

CapacityReport alpha_lower(const NoncommGraph& graph, const SearchConfig& cfg,
                           std::span<const StateVector> warm_start) {
  cfg.validate();
  const Index n = graph.dim();
  if (n == 1) return exact_report(graph, 1, Method::trivial, "one-dimensional ambient");
  if (graph.space().dim() == static_cast<std::size_t>(n * n))
    return exact_report(graph, 1, Method::trivial,
                        "complement is {0}: no rank-one matrix, alpha = 1");

  CapacityReport report;
  report.method = Method::search;
  std::optional<Codebook> incumbent;

  if (warm_start.size() >= 2) {
    Codebook warm = make_codebook(graph, {warm_start.begin(), warm_start.end()});
    if (warm.valid()) {
      incumbent = std::move(warm);
      report.note = "warm start codebook of size " + std::to_string(incumbent->size());
    }
  }

  if (!incumbent) {
    const ZeroCapacityEvidence evidence = capacity_is_zero(graph, cfg);
    report.restarts_used += evidence.search.restarts_used;
    report.rank_one_best_ratio = evidence.search.best_ratio;
    if (evidence.search.certificate) {
      const auto& cert = *evidence.search.certificate;
      Codebook pair = make_codebook(graph, {cert.left, cert.right});
      if (pair.valid()) {
        incumbent = std::move(pair);
        report.method = Method::rank_one_certified;
      }
    }
    if (!incumbent) {
      const CodebookSearch found = codebook_search(graph, 2, cfg);
      report.restarts_used += found.restarts_used;
      if (found.codebook) {
        incumbent = found.codebook;
      } else {
        report.failed_size = 2;
        report.failed_penalty = found.best_penalty;
      }
    }
  }

  for (std::size_t m = incumbent ? incumbent->size() + 1 : 0;
       incumbent && m >= 3 && m <= static_cast<std::size_t>(n); ++m) {
    const CodebookSearch found = codebook_search(graph, m, cfg, incumbent->vectors);
    report.restarts_used += found.restarts_used;
    if (!found.codebook) {
      report.failed_size = m;
      report.failed_penalty = found.best_penalty;
      break;
    }
    incumbent = found.codebook;
    report.method = Method::search;
  }

  set_alpha(report, incumbent ? incumbent->size() : 1);
  if (report.alpha_lower == static_cast<std::size_t>(n)) report.alpha_exact = report.alpha_lower;
  report.codebook = std::move(incumbent);
  return report;
}

CapacityReport alpha_exact_qubit(const NoncommGraph& graph) {
  if (graph.dim() != 2)
    throw Error(ErrorKind::precondition,
                "alpha_exact_qubit needs ambient dimension 2, got " +
                    std::to_string(graph.dim()));
  const std::size_t dim = graph.space().dim();
  const char* note =
      "qubit classification by dimension; asymptotic capacity assumed equal to "
      "the one-shot value for qubit graphs";
  CapacityReport report;
  report.method = Method::qubit_exact;
  report.note = note;
  if (dim >= 3) {
    set_alpha(report, 1);
    report.alpha_exact = 1;
    return report;
  }
  set_alpha(report, 2);
  report.alpha_exact = 2;
  if (dim == 1) {
    report.codebook = make_codebook(graph, computational_basis(2));
    return report;
  }
  // span{I, H}: the eigenvectors of the traceless Hermitian direction H are
  // the two codewords.
  Matrix best = Matrix::Zero(2, 2);
  for (const Matrix& e : graph.space().basis()) {
    const Matrix traceless = e - 0.5 * e.trace() * identity(2);
    for (const Matrix& h : {Matrix(traceless + traceless.adjoint()),
                            Matrix(Complex{0.0, 1.0} * (traceless - traceless.adjoint()))})
      if (h.norm() > best.norm()) best = h;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(best);
  report.codebook = make_codebook(
      graph, {StateVector(eig.eigenvectors().col(0)), StateVector(eig.eigenvectors().col(1))});
  return report;
}

CapacityReport capacity(const NoncommGraph& graph, const SearchConfig& cfg,
                        std::span<const StateVector> warm_start) {
  const Index n = graph.dim();
  if (n == 2) return alpha_exact_qubit(graph);
  if (graph.space().dim() == 1)
    return exact_report(graph, static_cast<std::size_t>(n), Method::trivial,
                        "scalar graph C I: every orthonormal basis is a codebook");
  if (is_diagonal_algebra(graph.space()))
    return exact_report(graph, static_cast<std::size_t>(n), Method::trivial,
                        "diagonal algebra span{|t><t|}: computational basis is a codebook");
  return alpha_lower(graph, cfg, warm_start);
}

TensorPowerReport tensor_power_lower(const NoncommGraph& graph, std::size_t k,
                                     const SearchConfig& cfg, std::size_t max_ambient) {
  if (k == 0) throw Error(ErrorKind::precondition, "tensor_power_lower: k must be >= 1");
  double ambient = 1.0;
  for (std::size_t i = 0; i < k; ++i) ambient *= static_cast<double>(graph.dim());
  if (ambient > static_cast<double>(max_ambient))
    throw Error(ErrorKind::size, "tensor_power_lower: ambient " +
                                     std::to_string(graph.dim()) + "^" + std::to_string(k) +
                                     " exceeds cap " + std::to_string(max_ambient));

  OperatorSubspace power = graph.space();
  for (std::size_t i = 1; i < k; ++i) power = tensor(power, graph.space(), max_ambient);
  const NoncommGraph g(std::move(power));
  const auto n = static_cast<std::size_t>(g.dim());

  TensorPowerReport out;
  out.k = k;
  out.ambient = g.dim();
  if (g.space().dim() == 1) {
    out.structural = true;
    out.report = exact_report(g, n, Method::trivial, "scalar graph C I");
  } else if (is_diagonal_algebra(g.space())) {
    out.structural = true;
    out.report = exact_report(g, n, Method::trivial,
                              "recognized as span{|t><t|}: alpha equals the ambient dimension");
  } else if (g.space().dim() == n * n) {
    out.structural = true;
    out.report = exact_report(g, 1, Method::trivial, "complement is {0}");
  } else {
    // Warm start from the k-fold product of a single-copy codebook.
    std::vector<StateVector> warm;
    const CapacityReport base = capacity(graph, cfg);
    if (base.codebook && base.codebook->size() >= 2) {
      Codebook product = *base.codebook;
      for (std::size_t i = 1; i < k; ++i) {
        product.vectors = product_vectors(product, *base.codebook);
      }
      warm = std::move(product.vectors);
    }
    out.report = alpha_lower(g, cfg, warm);
  }
  out.bits_per_use = out.report.bits_lower / static_cast<double>(k);
  return out;
}

}  // namespace zequa
