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

#include "zequa/zequa.h"

#include <exception>
#include <new>
#include <string>

#include "zequa/activation.hpp"
#include "zequa/capacity.hpp"
#include "zequa/catalog.hpp"
#include "zequa/document.hpp"
#include "zequa/errors.hpp"
#include "zequa/rankone.hpp"
#include "zequa/report.hpp"

struct zq_subspace {
  zequa::OperatorSubspace space;
};

struct zq_report {
  std::string json;
  bool passed = true;
};

namespace {

using namespace zequa;

thread_local std::string g_last_error;

zq_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return ZQ_ERR_DIMENSION;
    case ErrorKind::size: return ZQ_ERR_SIZE;
    case ErrorKind::numeric: return ZQ_ERR_NUMERIC;
    case ErrorKind::channel: return ZQ_ERR_CHANNEL;
    case ErrorKind::precondition: return ZQ_ERR_PRECONDITION;
    case ErrorKind::parse: return ZQ_ERR_PARSE;
    case ErrorKind::corrupt: return ZQ_ERR_CORRUPT;
    case ErrorKind::io: return ZQ_ERR_IO;
    case ErrorKind::invalid_codeword: return ZQ_ERR_VERIFICATION;
  }
  return ZQ_ERR_INTERNAL;
}

zq_status fail(zq_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
zq_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return ZQ_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZQ_ERR_INTERNAL, e.what());
  }
}

zq_config config_or_default(const zq_config* cfg) {
  zq_config c;
  zq_config_init(&c);
  return cfg ? *cfg : c;
}

SearchConfig search_config(const zq_config& c) {
  SearchConfig s;
  s.seed = c.seed;
  s.restarts = c.restarts;
  s.max_iters = c.max_iters;
  s.tol = c.tol;
  s.validate();
  return s;
}

void emit(zq_report** out, const Json& payload, bool passed) {
  *out = new zq_report{payload.dump(), passed};
}

zq_subspace* wrap(OperatorSubspace s) { return new zq_subspace{std::move(s)}; }

// Independent re-check of a stored codebook.
bool codebook_holds(const NoncommGraph& g, const CapacityReport& r) {
  if (!r.codebook) return r.alpha_lower == 1;
  const CodebookResiduals res = verify_codebook(g, r.codebook->vectors);
  return res.ortho < kOrthoThreshold && res.graph < kGraphThreshold &&
         r.codebook->size() == r.alpha_lower;
}

}  // namespace

#define ZQ_REQUIRE(cond)                                                \
  do {                                                                  \
    if (!(cond)) return fail(ZQ_ERR_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

extern "C" {

ZQ_API const char* zq_version(void) { return ZEQUA_VERSION; }

ZQ_API const char* zq_status_string(zq_status status) {
  switch (status) {
    case ZQ_OK: return "ok";
    case ZQ_ERR_ARGUMENT: return "argument error";
    case ZQ_ERR_DIMENSION: return "dimension error";
    case ZQ_ERR_SIZE: return "size error";
    case ZQ_ERR_NUMERIC: return "numeric error";
    case ZQ_ERR_CHANNEL: return "channel error";
    case ZQ_ERR_PRECONDITION: return "precondition error";
    case ZQ_ERR_PARSE: return "parse error";
    case ZQ_ERR_CORRUPT: return "corrupt corpus";
    case ZQ_ERR_IO: return "io error";
    case ZQ_ERR_VERIFICATION: return "verification failure";
    case ZQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ZQ_API const char* zq_last_error(void) { return g_last_error.c_str(); }

ZQ_API void zq_config_init(zq_config* cfg) {
  if (!cfg) return;
  const SearchConfig d;
  cfg->seed = d.seed;
  cfg->restarts = d.restarts;
  cfg->max_iters = d.max_iters;
  cfg->tol = d.tol;
  cfg->max_dim = kDefaultMaxAmbient;
}

ZQ_API zq_status zq_subspace_from_name(const char* name, const zq_config* cfg,
                                       zq_subspace** out) {
  ZQ_REQUIRE(name && out);
  return guarded([&] {
    *out = wrap(graph_from_name(name, config_or_default(cfg).max_dim).space());
  });
}

ZQ_API zq_status zq_subspace_from_spanning(size_t rows, size_t cols, size_t count,
                                           const double* entries, zq_subspace** out) {
  ZQ_REQUIRE(rows > 0 && cols > 0 && count > 0 && entries && out);
  return guarded([&] {
    std::vector<Matrix> mats;
    const double* p = entries;
    for (size_t k = 0; k < count; ++k) {
      Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j, p += 2)
          m(static_cast<Index>(i), static_cast<Index>(j)) = Complex(p[0], p[1]);
      mats.push_back(std::move(m));
    }
    *out = wrap(OperatorSubspace::from_spanning(mats));
  });
}

ZQ_API zq_status zq_subspace_load(const char* path, zq_subspace** out) {
  ZQ_REQUIRE(path && out);
  return guarded([&] { *out = wrap(load_document(path).space); });
}

ZQ_API zq_status zq_subspace_parse(const char* text, zq_subspace** out) {
  ZQ_REQUIRE(text && out);
  return guarded([&] { *out = wrap(parse_document(text).space); });
}

ZQ_API zq_status zq_subspace_save(const zq_subspace* s, const char* path,
                                  const char* name) {
  ZQ_REQUIRE(s && path);
  return guarded([&] {
    SubspaceDocument doc{kSchemaVersion, s->space, {}};
    if (name) doc.metadata["name"] = name;
    save_document(path, doc);
  });
}

ZQ_API void zq_subspace_free(zq_subspace* s) { delete s; }

ZQ_API size_t zq_subspace_rows(const zq_subspace* s) {
  return s ? static_cast<size_t>(s->space.rows()) : 0;
}
ZQ_API size_t zq_subspace_cols(const zq_subspace* s) {
  return s ? static_cast<size_t>(s->space.cols()) : 0;
}
ZQ_API size_t zq_subspace_dim(const zq_subspace* s) { return s ? s->space.dim() : 0; }

ZQ_API zq_status zq_subspace_basis(const zq_subspace* s, size_t k, double* entries) {
  ZQ_REQUIRE(s && entries && k < s->space.dim());
  const Matrix& m = s->space.basis()[k];
  double* p = entries;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j, p += 2) {
      p[0] = m(i, j).real();
      p[1] = m(i, j).imag();
    }
  return ZQ_OK;
}

ZQ_API zq_status zq_subspace_complement(const zq_subspace* s, zq_subspace** out) {
  ZQ_REQUIRE(s && out);
  return guarded([&] { *out = wrap(complement(s->space)); });
}

ZQ_API zq_status zq_subspace_tensor(const zq_subspace* a, const zq_subspace* b,
                                    const zq_config* cfg, zq_subspace** out) {
  ZQ_REQUIRE(a && b && out);
  return guarded([&] {
    *out = wrap(tensor(a->space, b->space, config_or_default(cfg).max_dim));
  });
}

ZQ_API const char* zq_report_json(const zq_report* r) { return r ? r->json.c_str() : ""; }
ZQ_API int zq_report_passed(const zq_report* r) { return r && r->passed ? 1 : 0; }
ZQ_API void zq_report_free(zq_report* r) { delete r; }

ZQ_API zq_status zq_describe(const zq_subspace* s, zq_report** out) {
  ZQ_REQUIRE(s && out);
  return guarded([&] { emit(out, describe(s->space), true); });
}

ZQ_API zq_status zq_graph_check(const zq_subspace* s, zq_report** out) {
  ZQ_REQUIRE(s && out);
  return guarded([&] {
    const GraphCheck check = check_noncomm_graph(s->space);
    Json j = describe(s->space);
    j["graph"] = to_json(check);
    emit(out, j, check.ok());
  });
}

ZQ_API zq_status zq_rank_one(const zq_subspace* s, int use_complement, const zq_config* cfg,
                             zq_report** out) {
  ZQ_REQUIRE(s && out);
  return guarded([&] {
    const OperatorSubspace target = use_complement ? complement(s->space) : s->space;
    const RankOneResult r = find_rank_one(target, search_config(config_or_default(cfg)));
    Json j;
    j["searched"] = use_complement ? "complement" : "subspace";
    j["subspace_dim"] = target.dim();
    j["rank_one"] = to_json(r);
    const bool ok = !r.certificate || verify_certificate(target, *r.certificate);
    emit(out, j, ok);
  });
}

ZQ_API zq_status zq_capacity(const zq_subspace* s, size_t power, const zq_config* cfg,
                             zq_report** out) {
  ZQ_REQUIRE(s && out && power >= 1);
  return guarded([&] {
    const zq_config c = config_or_default(cfg);
    const NoncommGraph g(s->space);
    if (power == 1) {
      const CapacityReport r = capacity(g, search_config(c));
      emit(out, to_json(r), codebook_holds(g, r));
      return;
    }
    const TensorPowerReport r = tensor_power_lower(g, power, search_config(c), c.max_dim);
    OperatorSubspace combined = g.space();
    for (size_t i = 1; i < power; ++i) combined = tensor(combined, g.space(), c.max_dim);
    emit(out, to_json(r), codebook_holds(NoncommGraph(std::move(combined)), r.report));
  });
}

ZQ_API zq_status zq_activation(const zq_subspace* s, const zq_subspace* t,
                               const zq_config* cfg, zq_report** out) {
  ZQ_REQUIRE(s && t && out);
  return guarded([&] {
    const zq_config c = config_or_default(cfg);
    const NoncommGraph gs(s->space), gt(t->space);
    const ActivationReport r = check_activation(gs, gt, search_config(c), c.max_dim);
    const NoncommGraph combined(tensor(gs.space(), gt.space(), c.max_dim));
    emit(out, to_json(r), codebook_holds(combined, r.alpha_combined));
  });
}

ZQ_API zq_status zq_lemma5(const zq_subspace* s, const zq_subspace* t, const zq_config* cfg,
                           zq_report** out) {
  ZQ_REQUIRE(s && t && out);
  return guarded([&] {
    const Lemma5Check r = lemma5_crosscheck(s->space, t->space,
                                            search_config(config_or_default(cfg)));
    bool ok = r.agree;
    if (r.bilinear.witness)
      ok = ok && bilinear_residual(s->space, t->space, r.bilinear.witness->a,
                                   r.bilinear.witness->b) < kBilinearFeasible;
    emit(out, to_json(r), ok);
  });
}

ZQ_API zq_status zq_family(int m, int verify_all, const zq_config* cfg, zq_report** out) {
  ZQ_REQUIRE(out);
  return guarded([&] {
    const zq_config c = config_or_default(cfg);
    const int cap = std::min<int>(kDefaultMaxFamilyM, static_cast<int>(c.max_dim / 2) - 1);
    const FamilyInstance family = family_t(m, cap);
    const FamilyVerification v = verify_family(family, search_config(c), verify_all != 0);
    const NoncommGraph combined(tensor(canonical::scalar(2).space(), family.t.space()));
    const CodebookResiduals res = verify_codebook(combined, family.codebook.vectors);
    Json j = to_json(v);
    j["codebook"] = to_json(family.codebook);
    emit(out, j, v.passed() && res.ortho < kOrthoThreshold && res.graph < kGraphThreshold);
  });
}

ZQ_API zq_status zq_suite_qubit(const zq_config* cfg, zq_report** out) {
  ZQ_REQUIRE(out);
  return guarded([&] {
    const QubitSuite suite = qubit_nonactivation_suite(search_config(config_or_default(cfg)));
    emit(out, to_json(suite), suite.passed());
  });
}

ZQ_API zq_status zq_corpus_save(const char* dir, zq_report** out) {
  ZQ_REQUIRE(dir && out);
  return guarded([&] {
    Json files = Json::array();
    for (const CorpusEntry& e : save_corpus(dir))
      files.push_back({{"name", e.name}, {"file", e.file.filename().string()},
                       {"dim", e.graph.space().dim()}});
    emit(out, Json{{"directory", dir}, {"graphs", files}}, true);
  });
}

ZQ_API zq_status zq_corpus_load(const char* dir, zq_report** out) {
  ZQ_REQUIRE(dir && out);
  return guarded([&] {
    Json files = Json::array();
    for (const CorpusEntry& e : load_corpus(dir))
      files.push_back({{"name", e.name}, {"file", e.file.filename().string()},
                       {"ambient", e.graph.dim()}, {"dim", e.graph.space().dim()}});
    emit(out, Json{{"directory", dir}, {"graphs", files}, {"verified", true}}, true);
  });
}

}  // extern "C"
