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

// Acceptance run: one PASS/FAIL line per criterion, with its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zequa/activation.hpp"
#include "zequa/capacity.hpp"
#include "zequa/errors.hpp"
#include "zequa/rankone.hpp"

using namespace zequa;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int g_failures = 0;

void criterion(int id, const char* title, double budget_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++g_failures;
  std::printf("%s criterion %d: %s;%s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", id,
              title, out.detail.str().c_str(), secs, budget_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

OperatorSubspace random_pair_member(std::mt19937_64& rng, bool graph_like) {
  std::uniform_int_distribution<int> dim_n(1, 3);
  const Index n = dim_n(rng);
  std::uniform_int_distribution<int> dim_d(1, static_cast<int>(n * n));
  const int d = dim_d(rng);
  std::vector<Matrix> mats;
  if (graph_like) {
    mats.push_back(identity(n));
    for (int k = 1; k < d; ++k) {
      const Matrix g = oracle::random_matrix(rng, n, n);
      mats.push_back(g + g.adjoint());
    }
  } else {
    for (int k = 0; k < d; ++k) mats.push_back(oracle::random_matrix(rng, n, n));
  }
  return OperatorSubspace::from_spanning(mats);
}

}  // namespace

int main() {
  const SearchConfig defaults;

  criterion(1, "qubit classification", 1.0, [](Outcome& o) {
    const std::size_t alpha[] = {2, 2, 1, 1};
    const double bits[] = {1.0, 1.0, 0.0, 0.0};
    const auto graphs = canonical::qubit_graphs();
    o.detail << " alpha =";
    for (std::size_t i = 0; i < 4; ++i) {
      const CapacityReport r = capacity(graphs[i], {});
      o.detail << " " << r.best_alpha();
      o.require(r.alpha_exact && *r.alpha_exact == alpha[i] && r.method == Method::qubit_exact,
                "alpha of " + canonical::qubit_graph_names()[i]);
      o.require(std::log2(static_cast<double>(*r.alpha_exact)) == bits[i] &&
                    r.bits_lower == bits[i],
                "bits of " + canonical::qubit_graph_names()[i]);
    }
    o.detail << ", bits = 1,1,0,0";
  });

  criterion(2, "activation at C^2 (x) C^4", 5.0, [&](Outcome& o) {
    const FamilyInstance f = family_t(3);
    const FamilyVerification v = verify_family(f, defaults, true);
    const NoncommGraph combined(tensor(canonical::scalar(2).space(), f.t.space()));
    const CodebookResiduals res = verify_codebook(combined, f.codebook.vectors);
    const std::size_t alpha_ci2 = *capacity(canonical::scalar(2), defaults).alpha_exact;
    o.detail << " codebook size " << f.codebook.size() << ", graph_residual " << res.graph
             << ", ortho_residual " << res.ortho << ", combined alpha >= " << f.codebook.size()
             << " > " << alpha_ci2 << " * 1";
    o.require(f.codebook.size() == 3, "codebook size");
    o.require(res.graph < 1e-10 && res.ortho < 1e-10, "residuals");
    o.require(f.codebook.size() > alpha_ci2 * 1, "strict increase");
    o.require(v.activated && v.passed(), "family verification");
  });

  criterion(3, "family structure m = 3, 4, 5", 30.0, [&](Outcome& o) {
    for (int m = 3; m <= 5; ++m) {
      const FamilyInstance f = family_t(m);
      const std::size_t exact_dim =
          static_cast<std::size_t>((m + 1) * (m + 1)) - oracle::exact_span_dim(f.spanning_complement);
      double diag = 0.0;
      for (const Matrix& d : family_diagonals(m)) diag = std::max(diag, f.t.space().residual(d));
      const RankOneResult r = find_rank_one(complement(f.t.space()), defaults);
      o.detail << " m=" << m << ": dim " << f.t.space().dim() << " (exact " << exact_dim
               << "), diagonal residual " << diag << ", rank-one " << to_string(r.verdict)
               << " over " << r.restarts_used << " restarts (best " << r.best_ratio << ");";
      o.require(exact_dim == static_cast<std::size_t>(3 * m + 1) &&
                    f.t.space().dim() == exact_dim,
                "dimension at m=" + std::to_string(m));
      o.require(diag < 1e-10, "diagonal membership");
      o.require(r.verdict == Verdict::not_found && r.restarts_used == 256, "rank-one search");
    }
  });

  criterion(4, "S (x) L(C^2) keeps alpha(S) and collapses", 60.0, [&](Outcome& o) {
    const auto graphs = canonical::qubit_graphs();
    const auto names = canonical::qubit_graph_names();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::size_t alpha_s = *alpha_exact_qubit(graphs[i]).alpha_exact;
      const NoncommGraph g(tensor(graphs[i].space(), canonical::full(2).space()));
      const CapacityReport r = alpha_lower(g, defaults);
      const CodebookSearch above = codebook_search(g, alpha_s + 1, defaults);
      double worst = 0.0;
      std::size_t pairs = 0;
      if (r.codebook) {
        const auto& v = r.codebook->vectors;
        for (std::size_t a = 0; a < v.size(); ++a)
          for (std::size_t b = 0; b < v.size(); ++b) {
            if (a == b) continue;
            const SchmidtCollapse c = schmidt_collapse(v[a], v[b], graphs[i], 2);
            worst = std::max(worst, c.residual);
            ++pairs;
          }
      }
      o.detail << " " << names[i] << ": found " << r.alpha_lower << ", size "
               << alpha_s + 1 << " best F " << above.best_penalty << ", " << pairs
               << " pairs collapsed (residual " << worst << ");";
      o.require(r.alpha_lower == alpha_s, "alpha for " + names[i]);
      o.require(!above.codebook && above.restarts_used == defaults.restarts,
                "failure above alpha for " + names[i]);
      o.require(worst < 1e-8, "collapse residual for " + names[i]);
    }
  });

  criterion(5, "qubit non-activation over 16 pairs", 120.0, [&](Outcome& o) {
    const QubitSuite s = qubit_nonactivation_suite(defaults);
    int activated = 0;
    for (const QubitPair& p : s.pairs) activated += p.activated ? 1 : 0;
    o.detail << " " << s.pairs.size() << " pairs, " << activated << " activated";
    o.require(s.pairs.size() == 16 && activated == 0 && s.passed(), "suite");
  });

  criterion(6, "no superactivation of span{I,X,Z} with T_3", 120.0, [&](Outcome& o) {
    const OperatorSubspace s = canonical::identity_xz().space();
    const OperatorSubspace t3 = family_t(3).t.space();
    SearchConfig cfg;
    cfg.restarts = 512;
    const CodebookSearch search = codebook_search(NoncommGraph(tensor(s, t3)), 2, cfg);
    const BilinearSearch bil = bilinear_feasibility(s, t3);
    o.detail << " size-2 search over " << search.restarts_used << " restarts best F "
             << search.best_penalty << ", bilinear best residual " << bil.best_residual
             << " over " << bil.restarts_used << " restarts";
    o.require(!search.codebook && search.restarts_used == 512, "codebook search");
    o.require(!bil.feasible() && bil.best_residual > 1e-4, "bilinear infeasible");
    o.require(search.codebook.has_value() == bil.feasible(), "verdicts agree");
  });

  criterion(7, "bilinear and rank-one agreement, planted rank-one recovery", 300.0, [&](Outcome& o) {
    std::mt19937_64 rng(2026);
    int agree = 0, feasible = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const OperatorSubspace s = random_pair_member(rng, trial % 2 == 0);
      const OperatorSubspace t = random_pair_member(rng, trial % 3 == 0);
      const Lemma5Check c = lemma5_crosscheck(s, t, defaults);
      agree += c.agree ? 1 : 0;
      feasible += c.bilinear.feasible() ? 1 : 0;
    }
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix planted =
          oracle::random_vector(rng, 3) * oracle::random_vector(rng, 3).adjoint();
      const OperatorSubspace s = OperatorSubspace::from_spanning(
          std::vector<Matrix>{oracle::random_matrix(rng, 3, 3), planted,
                              oracle::random_matrix(rng, 3, 3)});
      const RankOneResult r = find_rank_one(s, defaults);
      found += (r.verdict == Verdict::found && verify_certificate(s, *r.certificate)) ? 1 : 0;
    }
    o.detail << " agreement " << agree << "/50 (" << feasible << " feasible), planted "
             << found << "/100";
    o.require(agree == 50, "agreement rate");
    o.require(found == 100, "planted success rate");
  });

  criterion(8, "tensor powers of span{I,Z}", 1.0, [&](Outcome& o) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const TensorPowerReport r = tensor_power_lower(canonical::identity_z(), k, defaults);
      std::vector<Matrix> diag;
      for (Index t = 0; t < (Index{1} << k); ++t)
        diag.push_back(matrix_unit(r.ambient, r.ambient, t, t));
      NoncommGraph power = canonical::identity_z();
      for (std::size_t i = 1; i < k; ++i)
        power = NoncommGraph(tensor(power.space(), canonical::identity_z().space()));
      const double dist =
          projector_distance(power.space(), OperatorSubspace::from_spanning(diag));
      o.detail << " k=" << k << ": alpha " << r.report.best_alpha()
               << (r.structural ? " (structural)" : "") << ";";
      o.require(r.structural && r.report.alpha_exact &&
                    *r.report.alpha_exact == (std::size_t{1} << k),
                "alpha at k=" + std::to_string(k));
      o.require(dist < 1e-12, "span at k=" + std::to_string(k));
    }
  });

  std::printf("%d criterion failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
