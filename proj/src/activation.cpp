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

#include "zequa/activation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zequa/errors.hpp"

namespace zequa {

namespace {

// Codebook of a factor for building product warm starts; alpha = 1 factors
// contribute a single basis vector.
Codebook factor_codebook(const NoncommGraph& g, const CapacityReport& report) {
  if (report.codebook && report.codebook->valid()) return *report.codebook;
  return make_codebook(g, {StateVector(basis_vector(g.dim(), 0))});
}

std::string zero_status(const char* label, const CapacityReport& r) {
  std::ostringstream out;
  out << label << ": alpha = 1 ";
  if (r.method == Method::qubit_exact) {
    out << "(structural, qubit classification)";
  } else if (r.method == Method::trivial) {
    out << "(structural: " << r.note << ")";
  } else {
    out << "(heuristic: no codebook of size 2 found";
    if (r.rank_one_best_ratio)
      out << ", rank-one search on the complement not_found with best "
             "sigma2/sigma1 = "
          << *r.rank_one_best_ratio;
    out << ")";
  }
  return out.str();
}

}  // namespace

ActivationReport check_activation(const NoncommGraph& s, const NoncommGraph& t,
                                  const SearchConfig& cfg, std::size_t max_ambient) {
  const NoncommGraph combined(tensor(s.space(), t.space(), max_ambient));
  ActivationReport report;
  report.alpha_s = capacity(s, cfg);
  report.alpha_t = capacity(t, cfg);
  const auto warm = product_vectors(factor_codebook(s, report.alpha_s),
                                    factor_codebook(t, report.alpha_t));
  report.alpha_combined = capacity(combined, cfg, warm);

  const std::size_t as = report.alpha_s.best_alpha();
  const std::size_t at = report.alpha_t.best_alpha();
  const auto& c = report.alpha_combined;
  const bool certified = c.alpha_lower == 1 || (c.codebook && c.codebook->valid() &&
                                                c.codebook->size() == c.alpha_lower);
  const bool exceeds = certified && c.alpha_lower > as * at;
  report.activated = exceeds && (as == 1 || at == 1);
  report.superactivated = exceeds && as == 1 && at == 1;

  std::ostringstream caveat;
  if (as == 1) caveat << zero_status("S", report.alpha_s);
  if (at == 1) caveat << (as == 1 ? "; " : "") << zero_status("T", report.alpha_t);
  if (as != 1 && at != 1)
    caveat << "neither factor has alpha = 1; activation is not defined for this pair";
  caveat << ". Combined alpha is a certified lower bound (" << c.alpha_lower
         << (c.alpha_exact ? ", exact" : "") << ").";
  report.caveat = caveat.str();
  return report;
}

FamilyInstance family_t(int m, int max_m) {
  if (m < 3) throw Error(ErrorKind::precondition, "family_t: m must be >= 3");
  if (m > max_m)
    throw Error(ErrorKind::size, "family_t: m = " + std::to_string(m) +
                                     " exceeds cap " + std::to_string(max_m));
  const Index n = m + 1;
  std::vector<Matrix> spanning;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (i != j)
        spanning.push_back(matrix_unit(n, n, i, j) + matrix_unit(n, n, i + 1, j + 1));

  NoncommGraph t(complement(OperatorSubspace::from_spanning(spanning)));
  const NoncommGraph combined(tensor(canonical::scalar(2).space(), t.space()));

  std::vector<StateVector> vectors;
  for (Index i = 0; i < m; ++i) {
    Vector psi = Vector::Zero(2 * n);
    psi(i) = 1.0;          // |0>|i>
    psi(n + i + 1) = 1.0;  // |1>|i+1>
    vectors.emplace_back(std::move(psi));
  }
  Codebook codebook = make_codebook(combined, std::move(vectors));
  return FamilyInstance{m, std::move(t), std::move(spanning), std::move(codebook)};
}

std::vector<Matrix> family_diagonals(int m) {
  if (m < 3) throw Error(ErrorKind::precondition, "family_diagonals: m must be >= 3");
  const Index n = m + 1;
  std::vector<Matrix> out;
  for (Index j = 1; j <= m; ++j) {
    Matrix d = Matrix::Zero(n, n);
    for (Index k = 0; k <= m - j; ++k) d(k, j + k) = (k % 2 == 0) ? 1.0 : -1.0;
    out.push_back(std::move(d));
  }
  for (Index i = 0; i <= m; ++i) out.push_back(matrix_unit(n, n, i, i));
  for (Index j = 1; j <= m; ++j) {
    Matrix d = Matrix::Zero(n, n);
    for (Index k = 0; k <= m - j; ++k) d(j + k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    out.push_back(std::move(d));
  }
  return out;
}

bool FamilyVerification::passed() const {
  if (!activated) return false;
  if (!verify_all) return true;
  return graph.ok() && t_dim == static_cast<std::size_t>(3 * m + 1) &&
         spanning_residual < 1e-10 && diagonal_residual < 1e-10 &&
         ortho_residual < 1e-10 && graph_residual < 1e-10 && prop2 && prop2->all();
}

FamilyVerification verify_family(const FamilyInstance& family, const SearchConfig& cfg,
                                 bool verify_all) {
  FamilyVerification v;
  v.m = family.m;
  v.verify_all = verify_all;
  v.t_dim = family.t.space().dim();
  v.codebook_size = family.codebook.size();
  v.ortho_residual = family.codebook.ortho_residual;
  v.graph_residual = family.codebook.graph_residual;
  v.t_zero = capacity_is_zero(family.t, cfg);
  v.activated = family.codebook.valid() && v.codebook_size > 2 &&
                v.t_zero.verdict == ZeroCapacity::likely_zero;
  if (!verify_all) return v;

  const OperatorSubspace& t = family.t.space();
  v.graph = check_noncomm_graph(t);
  for (const Matrix& b : family.spanning_complement)
    v.spanning_residual = std::max(v.spanning_residual, t.project(b).norm() / b.norm());
  for (const Matrix& d : family_diagonals(family.m))
    v.diagonal_residual = std::max(v.diagonal_residual, t.residual(d));
  v.prop2 = prop2_verify(std::span(family.codebook.vectors).first(3), family.m + 1);
  return v;
}

double bilinear_residual(const OperatorSubspace& s, const OperatorSubspace& t,
                         const Matrix& a, const Matrix& b) {
  if (a.rows() != s.rows() || a.cols() != t.rows() || b.rows() != t.cols() ||
      b.cols() != s.cols())
    throw Error(ErrorKind::dimension,
                "bilinear_residual: A must be " + std::to_string(s.rows()) + "x" +
                    std::to_string(t.rows()) + " and B " + std::to_string(t.cols()) +
                    "x" + std::to_string(s.cols()));
  double worst = 0.0;
  for (const Matrix& p : s.basis())
    for (const Matrix& q : t.basis())
      worst = std::max(worst, std::abs((p.adjoint() * a * q.conjugate() * b).trace()));
  return worst;
}

SearchConfig bilinear_defaults() {
  SearchConfig cfg;
  cfg.restarts = 64;
  return cfg;
}

namespace {

// Unit vector minimizing |K x|; lies in the nullspace when one exists.
Vector least_singular_vector(const Matrix& k) {
  Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullV);
  return svd.matrixV().col(k.cols() - 1);
}

struct BilinearAttempt {
  double residual = std::numeric_limits<double>::infinity();
  Matrix a, b;
};

class BilinearProblem {
 public:
  BilinearProblem(const OperatorSubspace& s, const OperatorSubspace& t) : s_(s) {
    for (const Matrix& q : t.basis()) t_conj_.push_back(q.conjugate());
    m1_ = s.rows(); n1_ = s.cols(); m2_ = t.rows(); n2_ = t.cols();
  }

  // Rows indexed by basis pairs; Tr[P^dagger A Qbar B] = row . vec(A).
  Matrix constraints_on_a(const Matrix& b) const {
    Matrix k(static_cast<Index>(s_.dim() * t_conj_.size()), m1_ * m2_);
    Index row = 0;
    for (const Matrix& p : s_.basis())
      for (const Matrix& qbar : t_conj_)
        k.row(row++) = vectorize((qbar * b * p.adjoint()).transpose()).transpose();
    return k;
  }
  Matrix constraints_on_b(const Matrix& a) const {
    Matrix k(static_cast<Index>(s_.dim() * t_conj_.size()), n2_ * n1_);
    Index row = 0;
    for (const Matrix& p : s_.basis())
      for (const Matrix& qbar : t_conj_)
        k.row(row++) = vectorize((p.adjoint() * a * qbar).transpose()).transpose();
    return k;
  }

  BilinearAttempt run(std::uint64_t seed, std::size_t max_iters) const {
    std::mt19937_64 rng(seed);
    Matrix b = random_complex_normal(rng, n2_, n1_);
    b /= b.norm();
    BilinearAttempt best;
    Matrix a;
    double checkpoint = std::numeric_limits<double>::infinity();
    for (std::size_t it = 1; it <= max_iters; ++it) {
      a = unvectorize(least_singular_vector(constraints_on_a(b)), m1_, m2_);
      const Matrix kb = constraints_on_b(a);
      const Vector bv = least_singular_vector(kb);
      b = unvectorize(bv, n2_, n1_);
      const double residual = (kb * bv).cwiseAbs().maxCoeff();
      if (residual < best.residual) best = {residual, a, b};
      if (best.residual < kBilinearFeasible * 1e-3) break;
      if (it % 10 == 0) {
        if (best.residual > (1.0 - 1e-3) * checkpoint) break;
        checkpoint = best.residual;
      }
    }
    return best;
  }

 private:
  const OperatorSubspace& s_;
  std::vector<Matrix> t_conj_;
  Index m1_, n1_, m2_, n2_;
};

}  // namespace

BilinearSearch bilinear_feasibility(const OperatorSubspace& s, const OperatorSubspace& t,
                                    const SearchConfig& cfg) {
  cfg.validate();
  BilinearSearch out;
  if (s.dim() == 0 || t.dim() == 0) {
    // Every pair of unit matrices is a witness.
    Matrix a = matrix_unit(s.rows(), t.rows(), 0, 0);
    Matrix b = matrix_unit(t.cols(), s.cols(), 0, 0);
    out.witness = BilinearWitness{a, b, 0.0};
    return out;
  }
  const BilinearProblem problem(s, t);
  const std::function<BilinearAttempt(std::size_t)> attempt = [&](std::size_t r) {
    return problem.run(restart_seed(cfg.seed, r), cfg.max_iters);
  };
  const std::function<bool(const BilinearAttempt&)> done = [](const BilinearAttempt& a) {
    return a.residual < kBilinearFeasible;
  };
  const auto attempts = run_restarts(cfg.restarts, attempt, done);
  std::size_t best = 0;
  for (std::size_t r = 1; r < attempts.size(); ++r)
    if (attempts[r].residual < attempts[best].residual) best = r;
  out.restarts_used = attempts.size();
  const BilinearAttempt& winner = attempts[best];
  // Re-measured independently of the alternating updates.
  out.best_residual = bilinear_residual(s, t, winner.a, winner.b);
  if (out.best_residual < kBilinearFeasible)
    out.witness = BilinearWitness{winner.a, winner.b, out.best_residual};
  return out;
}

BilinearWitness witness_from_rank_one(const OperatorSubspace& s, const OperatorSubspace& t,
                                      const StateVector& psi, const StateVector& phi) {
  const Index m1 = s.rows(), n1 = s.cols(), m2 = t.rows(), n2 = t.cols();
  if (psi.dim() != m1 * m2 || phi.dim() != n1 * n2)
    throw Error(ErrorKind::dimension, "witness_from_rank_one: vector dimensions do not "
                                      "match the tensor ambient");
  Matrix a(m1, m2);
  for (Index i = 0; i < m1; ++i)
    for (Index j = 0; j < m2; ++j) a(i, j) = psi[i * m2 + j];
  Matrix b(n2, n1);
  for (Index k = 0; k < n1; ++k)
    for (Index l = 0; l < n2; ++l) b(l, k) = std::conj(phi[k * n2 + l]);
  a /= a.norm();
  b /= b.norm();
  return BilinearWitness{a, b, bilinear_residual(s, t, a, b)};
}

Lemma5Check lemma5_crosscheck(const OperatorSubspace& s, const OperatorSubspace& t,
                              const SearchConfig& cfg) {
  const std::size_t cap = static_cast<std::size_t>(
      std::max(s.rows() * t.rows(), s.cols() * t.cols()));
  Lemma5Check check;
  check.rank_one = find_rank_one(complement(tensor(s, t, std::max(cap, kDefaultMaxAmbient))), cfg);
  check.bilinear = bilinear_feasibility(s, t, cfg);
  check.agree = (check.rank_one.verdict == Verdict::found) == check.bilinear.feasible();
  return check;
}

SchmidtCollapse schmidt_collapse(const StateVector& phi, const StateVector& psi,
                                 const NoncommGraph& s, Index n) {
  const Index d = s.dim();
  if (n <= 0 || phi.dim() != d * n || psi.dim() != d * n)
    throw Error(ErrorKind::dimension, "schmidt_collapse: states must live on C^" +
                                          std::to_string(d) + " (x) C^" + std::to_string(n));
  // phi = sum Phi(a, i) |a>|i>.
  const Matrix phi_m = unvectorize(phi.amplitudes(), d, n);
  const Matrix psi_m = unvectorize(psi.amplitudes(), d, n);

  SchmidtCollapse out;
  for (const Matrix& a : s.space().basis())
    out.precondition_residual =
        std::max(out.precondition_residual, (phi_m.adjoint() * a * psi_m).norm());
  if (!(out.precondition_residual < 1e-8)) {
    std::ostringstream msg;
    msg << "schmidt_collapse: |phi><psi| is not orthogonal to S (x) L(C^n), residual "
        << out.precondition_residual;
    throw Error(ErrorKind::invalid_codeword, msg.str());
  }

  auto schmidt_vectors = [](const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    std::vector<StateVector> vs;
    for (Index k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > 1e-10) vs.emplace_back(svd.matrixU().col(k));
    return vs;
  };
  out.left = schmidt_vectors(phi_m);
  out.right = schmidt_vectors(psi_m);

  for (const StateVector& l : out.left)
    for (const StateVector& r : out.right)
      for (const Matrix& a : s.space().basis())
        out.residual = std::max(out.residual, std::abs(l.amplitudes().dot(a * r.amplitudes())));
  if (!(out.residual < 1e-8)) {
    std::ostringstream msg;
    msg << "schmidt_collapse: collapsed pair residual " << out.residual
        << " exceeds 1e-8";
    throw Error(ErrorKind::invalid_codeword, msg.str());
  }
  return out;
}

Prop2Report prop2_verify(std::span<const StateVector> codebook, Index n) {
  if (codebook.size() != 3)
    throw Error(ErrorKind::dimension, "prop2_verify: needs exactly 3 codewords");
  for (const StateVector& v : codebook)
    if (n <= 0 || v.dim() != 2 * n)
      throw Error(ErrorKind::dimension, "prop2_verify: codewords must live on C^2 (x) C^" +
                                            std::to_string(n));
  auto second_sigma = [](const Vector& x, const Vector& y) {
    Matrix pair(x.size(), 2);
    pair << x, y;
    return singular_values(pair)[1];
  };
  std::vector<Vector> v, w;
  for (const StateVector& psi : codebook) {
    v.push_back(psi.amplitudes().head(n));
    w.push_back(psi.amplitudes().tail(n));
  }
  Prop2Report r;
  r.min_norm = r.min_self_sigma = r.min_cross_sigma = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    r.min_norm = std::min({r.min_norm, v[i].norm(), w[i].norm()});
    r.min_self_sigma = std::min(r.min_self_sigma, second_sigma(v[i], w[i]));
    for (std::size_t j = i + 1; j < 3; ++j)
      r.min_cross_sigma = std::min(r.min_cross_sigma, second_sigma(w[i], w[j]));
  }
  r.nonzero = r.min_norm > 1e-10;
  r.self_independent = r.min_self_sigma > 1e-10;
  r.cross_independent = r.min_cross_sigma > 1e-10;
  return r;
}

bool QubitSuite::passed() const {
  if (pairs.size() != 16) return false;
  for (const QubitPair& p : pairs)
    if (p.activated) return false;
  for (const auto& [name, ok] : completely_noisy)
    if (!ok) return false;
  return true;
}

QubitSuite qubit_nonactivation_suite(const SearchConfig& cfg) {
  const auto graphs = canonical::qubit_graphs();
  const auto names = canonical::qubit_graph_names();
  std::vector<CapacityReport> exact;
  for (const NoncommGraph& g : graphs) exact.push_back(alpha_exact_qubit(g));

  QubitSuite suite;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      const NoncommGraph combined(tensor(graphs[i].space(), graphs[j].space()));
      const auto warm = product_vectors(factor_codebook(graphs[i], exact[i]),
                                        factor_codebook(graphs[j], exact[j]));
      QubitPair pair;
      pair.s_name = names[i];
      pair.t_name = names[j];
      pair.alpha_s = exact[i].best_alpha();
      pair.alpha_t = exact[j].best_alpha();
      pair.combined = alpha_lower(combined, cfg, warm);
      pair.activated = pair.combined.alpha_lower > pair.alpha_s * pair.alpha_t;
      suite.pairs.push_back(std::move(pair));
    }
  // S (x) L(C^2) is the last column of each row.
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const QubitPair& p = suite.pairs[i * graphs.size() + graphs.size() - 1];
    suite.completely_noisy.emplace_back(names[i], p.combined.alpha_lower == p.alpha_s);
  }
  return suite;
}

}  // namespace zequa
