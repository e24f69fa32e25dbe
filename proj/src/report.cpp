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

#include "zequa/report.hpp"

#include <cmath>

namespace zequa {

namespace {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

// JSON has no infinity; unbounded values become null.
Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

Json to_json(const SearchConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["restarts"] = cfg.restarts;
  j["max_iters"] = cfg.max_iters;
  j["tol"] = cfg.tol;
  return j;
}

Json to_json(const GraphCheck& check) {
  Json j;
  j["is_noncomm_graph"] = check.ok();
  j["dagger_closed"] = check.dagger_closed;
  j["contains_identity"] = check.contains_identity;
  j["dagger_residual"] = check.dagger_residual;
  j["identity_residual"] = check.identity_residual;
  j["diagnostic"] = check.diagnostic();
  return j;
}

Json to_json(const RankOneResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["best_ratio"] = real(r.best_ratio);
  j["restarts_used"] = r.restarts_used;
  j["seed"] = r.seed;
  if (r.certificate) {
    Json c;
    Vector coeffs(static_cast<Index>(r.certificate->coeffs.size()));
    for (std::size_t k = 0; k < r.certificate->coeffs.size(); ++k)
      coeffs(static_cast<Index>(k)) = r.certificate->coeffs[k];
    c["sigma_ratio"] = r.certificate->sigma_ratio;
    c["coeffs"] = to_json(coeffs);
    c["left"] = to_json(r.certificate->left.amplitudes());
    c["right"] = to_json(r.certificate->right.amplitudes());
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json to_json(const Codebook& c) {
  Json j;
  j["size"] = c.size();
  j["graph_dim"] = c.graph_dim;
  j["ortho_residual"] = c.ortho_residual;
  j["graph_residual"] = c.graph_residual;
  j["valid"] = c.valid();
  Json vectors = Json::array();
  for (const StateVector& v : c.vectors) vectors.push_back(to_json(v.amplitudes()));
  j["vectors"] = std::move(vectors);
  return j;
}

Json to_json(const CapacityReport& r) {
  Json j;
  j["alpha_lower"] = r.alpha_lower;
  j["alpha_exact"] = r.alpha_exact ? Json(*r.alpha_exact) : Json(nullptr);
  j["bits_lower"] = r.bits_lower;
  j["bits_exact"] =
      r.alpha_exact ? Json(std::log2(static_cast<double>(*r.alpha_exact))) : Json(nullptr);
  j["method"] = to_string(r.method);
  j["failed_size"] = r.failed_size ? Json(*r.failed_size) : Json(nullptr);
  j["failed_penalty"] = r.failed_size ? real(r.failed_penalty) : Json(nullptr);
  j["restarts_used"] = r.restarts_used;
  j["rank_one_best_ratio"] =
      r.rank_one_best_ratio ? real(*r.rank_one_best_ratio) : Json(nullptr);
  j["note"] = r.note;
  j["codebook"] = r.codebook ? to_json(*r.codebook) : Json(nullptr);
  return j;
}

Json to_json(const TensorPowerReport& r) {
  Json j;
  j["k"] = r.k;
  j["ambient"] = r.ambient;
  j["structural"] = r.structural;
  j["bits_per_use"] = r.bits_per_use;
  j["scope"] = "finite tensor power only; the asymptotic limit is not computed";
  j["report"] = to_json(r.report);
  return j;
}

Json to_json(const ActivationReport& r) {
  Json j;
  j["activated"] = r.activated;
  j["superactivated"] = r.superactivated;
  j["alpha_s"] = r.alpha_s.best_alpha();
  j["alpha_t"] = r.alpha_t.best_alpha();
  j["alpha_combined_lower"] = r.alpha_combined.alpha_lower;
  j["caveat"] = r.caveat;
  j["capacity_s"] = to_json(r.alpha_s);
  j["capacity_t"] = to_json(r.alpha_t);
  j["capacity_combined"] = to_json(r.alpha_combined);
  return j;
}

Json to_json(const FamilyVerification& v) {
  Json j;
  j["m"] = v.m;
  j["ambient"] = v.m + 1;
  j["dim_t"] = v.t_dim;
  j["codebook_size"] = v.codebook_size;
  j["ortho_residual"] = v.ortho_residual;
  j["graph_residual"] = v.graph_residual;
  j["alpha_combined_lower"] = v.codebook_size;
  j["alpha_product"] = 2;
  j["activated"] = v.activated;
  Json zero;
  zero["verdict"] = to_string(v.t_zero.verdict);
  zero["complement_dim"] = v.t_zero.complement_dim;
  zero["rank_one_search"] = to_json(v.t_zero.search);
  j["t_zero_capacity"] = std::move(zero);
  j["verify_all"] = v.verify_all;
  if (v.verify_all) {
    Json checks;
    checks["graph"] = to_json(v.graph);
    checks["dim_expected"] = 3 * v.m + 1;
    checks["spanning_residual"] = v.spanning_residual;
    checks["diagonal_residual"] = v.diagonal_residual;
    if (v.prop2) {
      Json p;
      p["nonzero"] = v.prop2->nonzero;
      p["self_independent"] = v.prop2->self_independent;
      p["cross_independent"] = v.prop2->cross_independent;
      p["min_norm"] = v.prop2->min_norm;
      p["min_self_sigma"] = v.prop2->min_self_sigma;
      p["min_cross_sigma"] = v.prop2->min_cross_sigma;
      checks["codeword_structure"] = std::move(p);
    }
    j["checks"] = std::move(checks);
  }
  j["passed"] = v.passed();
  return j;
}

Json to_json(const BilinearSearch& b) {
  Json j;
  j["feasible"] = b.feasible();
  j["best_residual"] = real(b.best_residual);
  j["restarts_used"] = b.restarts_used;
  if (b.witness) {
    Json w;
    w["residual"] = b.witness->residual;
    w["a"] = matrix_json(b.witness->a);
    w["b"] = matrix_json(b.witness->b);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const Lemma5Check& c) {
  Json j;
  j["agree"] = c.agree;
  j["rank_one"] = to_json(c.rank_one);
  j["bilinear"] = to_json(c.bilinear);
  return j;
}

Json to_json(const QubitSuite& s) {
  Json j;
  j["passed"] = s.passed();
  Json pairs = Json::array();
  for (const QubitPair& p : s.pairs) {
    Json e;
    e["s"] = p.s_name;
    e["t"] = p.t_name;
    e["alpha_s"] = p.alpha_s;
    e["alpha_t"] = p.alpha_t;
    e["alpha_combined_lower"] = p.combined.alpha_lower;
    e["alpha_combined_exact"] =
        p.combined.alpha_exact ? Json(*p.combined.alpha_exact) : Json(nullptr);
    e["method"] = to_string(p.combined.method);
    e["failed_size"] = p.combined.failed_size ? Json(*p.combined.failed_size) : Json(nullptr);
    e["activated"] = p.activated;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  Json noisy = Json::array();
  for (const auto& [name, ok] : s.completely_noisy) noisy.push_back({{"s", name}, {"holds", ok}});
  j["completely_noisy"] = std::move(noisy);
  return j;
}

Json describe(const OperatorSubspace& s) {
  Json j;
  j["ambient_rows"] = s.rows();
  j["ambient_cols"] = s.cols();
  j["dim"] = s.dim();
  if (s.rows() == s.cols()) j["graph"] = to_json(check_noncomm_graph(s));
  return j;
}

}  // namespace zequa
