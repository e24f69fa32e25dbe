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

// zequa command-line tool. Every command prints one RunReport:
//   {"command", "config", "result", "wall_time_ms", "tool_version"}
// Exit status: 0 ok, 2 verification failure, 1 usage or input error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zequa/zequa.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct SubspaceDeleter {
  void operator()(zq_subspace* s) const { zq_subspace_free(s); }
};
struct ReportDeleter {
  void operator()(zq_report* r) const { zq_report_free(r); }
};
using Subspace = std::unique_ptr<zq_subspace, SubspaceDeleter>;
using Report = std::unique_ptr<zq_report, ReportDeleter>;

struct Failure {
  zq_status status;
  std::string message;
};

void check(zq_status status) {
  if (status != ZQ_OK) throw Failure{status, zq_last_error()};
}

// A file path when one exists, otherwise a canonical graph name.
Subspace open_subspace(const std::string& spec, const zq_config& cfg) {
  zq_subspace* raw = nullptr;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec))
    check(zq_subspace_load(spec.c_str(), &raw));
  else
    check(zq_subspace_from_name(spec.c_str(), &cfg, &raw));
  return Subspace(raw);
}

struct Options {
  zq_config cfg{};
  std::string json_out;
  std::string command;
  // Positional and per-command arguments.
  std::string spec, spec_t, out_path, dir;
  std::size_t power = 1;
  int m = 3;
  bool verify_all = false;
  bool complement = false;
};

Json config_json(const zq_config& c) {
  Json j;
  j["seed"] = c.seed;
  j["restarts"] = c.restarts;
  j["max_iters"] = c.max_iters;
  j["tol"] = c.tol;
  j["max_dim"] = c.max_dim;
  return j;
}

Report run_command(const Options& o) {
  zq_report* raw = nullptr;
  const zq_config& c = o.cfg;
  if (o.command == "graph build") {
    Subspace s = open_subspace(o.spec, c);
    if (!o.out_path.empty()) check(zq_subspace_save(s.get(), o.out_path.c_str(), o.spec.c_str()));
    check(zq_describe(s.get(), &raw));
  } else if (o.command == "graph check") {
    check(zq_graph_check(open_subspace(o.spec, c).get(), &raw));
  } else if (o.command == "rankone") {
    check(zq_rank_one(open_subspace(o.spec, c).get(), o.complement ? 1 : 0, &c, &raw));
  } else if (o.command == "capacity") {
    check(zq_capacity(open_subspace(o.spec, c).get(), o.power, &c, &raw));
  } else if (o.command == "activation") {
    check(zq_activation(open_subspace(o.spec, c).get(), open_subspace(o.spec_t, c).get(), &c,
                        &raw));
  } else if (o.command == "lemma5") {
    check(zq_lemma5(open_subspace(o.spec, c).get(), open_subspace(o.spec_t, c).get(), &c,
                    &raw));
  } else if (o.command == "family") {
    check(zq_family(o.m, o.verify_all ? 1 : 0, &c, &raw));
  } else if (o.command == "suite qubit") {
    check(zq_suite_qubit(&c, &raw));
  } else if (o.command == "corpus save") {
    check(zq_corpus_save(o.dir.c_str(), &raw));
  } else if (o.command == "corpus load") {
    check(zq_corpus_load(o.dir.c_str(), &raw));
  }
  return Report(raw);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  zq_config_init(&o.cfg);

  CLI::App app{"Zero-error capacity bounds for noncommutative graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(zq_version()));
  app.add_option("--seed", o.cfg.seed, "Base seed for restarts");
  app.add_option("--restarts", o.cfg.restarts, "Restarts per search")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iters", o.cfg.max_iters, "Iterations per restart")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", o.cfg.tol, "Rank-one acceptance tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dim", o.cfg.max_dim, "Cap on ambient dimensions")
      ->envname("ZEQUA_MAX_DIM")
      ->check(CLI::PositiveNumber);
  app.add_option("--json-out", o.json_out, "Write the report here instead of stdout");
  app.fallthrough();

  auto* graph = app.add_subcommand("graph", "Build or check a graph")->require_subcommand(1);
  auto* build = graph->add_subcommand("build", "Build a canonical graph or load a file");
  build->add_option("spec", o.spec, "Canonical name or .ncg file")->required();
  build->add_option("-o,--out", o.out_path, "Save the subspace as a .ncg document");
  auto* gcheck = graph->add_subcommand("check", "Check S = S^dagger and I in S");
  gcheck->add_option("spec", o.spec, "Canonical name or .ncg file")->required();

  auto* rankone = app.add_subcommand("rankone", "Search a subspace for a rank-one element");
  rankone->add_option("spec", o.spec, "Canonical name or .ncg file")->required();
  rankone->add_flag("--complement", o.complement, "Search the orthogonal complement");

  auto* cap = app.add_subcommand("capacity", "One-shot capacity bounds");
  cap->add_option("spec", o.spec, "Canonical name or .ncg file")->required();
  cap->add_option("--power", o.power, "Tensor power k")->check(CLI::PositiveNumber);

  auto* act = app.add_subcommand("activation", "Test alpha(S (x) T) > alpha(S) alpha(T)");
  act->add_option("S", o.spec, "Canonical name or .ncg file")->required();
  act->add_option("T", o.spec_t, "Canonical name or .ncg file")->required();

  auto* lemma = app.add_subcommand("lemma5", "Rank-one vs bilinear cross-check on (S (x) T)^perp");
  lemma->add_option("S", o.spec, "Canonical name or .ncg file")->required();
  lemma->add_option("T", o.spec_t, "Canonical name or .ncg file")->required();

  auto* fam = app.add_subcommand("family", "Build and verify the activating family T_m");
  fam->add_option("--m", o.m, "Family parameter, 3 <= m <= 7")->required();
  fam->add_flag("--verify-all", o.verify_all, "Run every structural check");

  auto* suite = app.add_subcommand("suite", "Regression suites")->require_subcommand(1);
  suite->add_subcommand("qubit", "All 16 ordered pairs of qubit graphs");

  auto* corpus = app.add_subcommand("corpus", "Canonical graph corpus")->require_subcommand(1);
  auto* csave = corpus->add_subcommand("save", "Write the corpus to a directory");
  csave->add_option("dir", o.dir)->required();
  auto* cload = corpus->add_subcommand("load", "Read and verify the corpus");
  cload->add_option("dir", o.dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto* sub : app.get_subcommands()) {
    o.command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) o.command += " " + inner->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = run_command(o);
  } catch (const Failure& f) {
    std::cerr << "zequa: " << zq_status_string(f.status) << ": " << f.message << "\n";
    return f.status == ZQ_ERR_CORRUPT || f.status == ZQ_ERR_VERIFICATION ? kExitVerification
                                                                         : kExitUsage;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  Json run;
  run["command"] = o.command;
  run["config"] = config_json(o.cfg);
  run["result"] = Json::parse(zq_report_json(report.get()));
  run["passed"] = zq_report_passed(report.get()) == 1;
  run["wall_time_ms"] = elapsed.count();
  run["tool_version"] = zq_version();
  const std::string text = run.dump(2) + "\n";

  if (o.json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.json_out, std::ios::trunc);
    if (!(out << text)) {
      std::cerr << "zequa: cannot write " << o.json_out << "\n";
      return kExitUsage;
    }
  }
  return zq_report_passed(report.get()) ? kExitOk : kExitVerification;
}
