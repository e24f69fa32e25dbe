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

#include "zequa/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zequa/catalog.hpp"
#include "zequa/errors.hpp"

namespace zequa {

using nlohmann::ordered_json;

namespace {

std::string position(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the offending character.
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  const std::size_t line = 1 + std::count(text.begin(), text.begin() + end, '\n');
  const std::size_t last_nl = text.substr(0, end).rfind('\n');
  const std::size_t column = last_nl == std::string_view::npos ? end + 1 : end - last_nl;
  return std::to_string(line) + ":" + std::to_string(column);
}

[[noreturn]] void schema_error(const std::string& source, const std::string& what) {
  throw Error(ErrorKind::parse, source + ": " + what);
}

const ordered_json& field(const ordered_json& obj, const char* key,
                          const std::string& source) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(source, std::string("missing field '") + key + "'");
  return *it;
}

Index positive_int(const ordered_json& v, const char* key, const std::string& source) {
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    schema_error(source, std::string("'") + key + "' must be a positive integer");
  return static_cast<Index>(v.get<long long>());
}

Matrix read_matrix(const ordered_json& m, Index rows, Index cols, std::size_t k,
                   const std::string& source) {
  const std::string where = "basis[" + std::to_string(k) + "]";
  if (!m.is_array() || static_cast<Index>(m.size()) != rows)
    schema_error(source, where + " must have " + std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = m[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      schema_error(source, where + " row " + std::to_string(i) + " must have " +
                               std::to_string(cols) + " entries");
    for (Index j = 0; j < cols; ++j) {
      const auto& e = row[static_cast<std::size_t>(j)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        schema_error(source, where + " entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be an [re, im] pair");
      out(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return out;
}

}  // namespace

std::string serialize_document(const SubspaceDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["ambient_rows"] = doc.space.rows();
  j["ambient_cols"] = doc.space.cols();
  ordered_json basis = ordered_json::array();
  for (const Matrix& m : doc.space.basis()) {
    ordered_json rows = ordered_json::array();
    for (Index i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Index k = 0; k < m.cols(); ++k)
        row.push_back({m(i, k).real(), m(i, k).imag()});
      rows.push_back(std::move(row));
    }
    basis.push_back(std::move(rows));
  }
  j["basis"] = std::move(basis);
  j["metadata"] = ordered_json::object();
  for (const auto& [k, v] : doc.metadata) j["metadata"][k] = v;
  return j.dump(1) + "\n";
}

SubspaceDocument parse_document(std::string_view text, const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse,
                source + ":" + position(text, e.byte) + ": malformed document");
  }
  if (!j.is_object()) schema_error(source, "top level must be an object");

  SubspaceDocument doc;
  const auto& version = field(j, "schema_version", source);
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
    schema_error(source, "unsupported schema_version");
  const Index rows = positive_int(field(j, "ambient_rows", source), "ambient_rows", source);
  const Index cols = positive_int(field(j, "ambient_cols", source), "ambient_cols", source);
  const auto& basis_json = field(j, "basis", source);
  if (!basis_json.is_array()) schema_error(source, "'basis' must be an array");

  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < basis_json.size(); ++k)
    basis.push_back(read_matrix(basis_json[k], rows, cols, k, source));

  if (const auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) schema_error(source, "'metadata' must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) schema_error(source, "metadata '" + k + "' must be text");
      doc.metadata[k] = v.get<std::string>();
    }
  }
  try {
    doc.space = OperatorSubspace::from_orthonormal(rows, cols, std::move(basis));
  } catch (const Error& e) {
    throw Error(ErrorKind::corrupt, source + ": " + e.what());
  }
  return doc;
}

SubspaceDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path.string());
}

void save_document(const std::filesystem::path& path, const SubspaceDocument& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << serialize_document(doc);
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

std::string corpus_file_name(std::string_view name) {
  std::string file(name);
  std::replace(file.begin(), file.end(), ':', '_');
  return file + ".ncg";
}

std::vector<CorpusEntry> save_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<CorpusEntry> out;
  for (const std::string& name : corpus_names()) {
    NoncommGraph g = graph_from_name(name);
    SubspaceDocument doc{kSchemaVersion, g.space(), {{"name", name}}};
    const auto file = dir / corpus_file_name(name);
    save_document(file, doc);
    out.push_back({name, file, std::move(g)});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> out;
  for (const std::string& name : corpus_names()) {
    const auto file = dir / corpus_file_name(name);
    auto corrupt = [&](const std::string& check) {
      return Error(ErrorKind::corrupt, "corpus file " + file.string() + ": " + check);
    };
    SubspaceDocument doc;
    try {
      doc = load_document(file);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::io) throw;
      throw corrupt(std::string(to_string(e.kind())) + " check failed: " + e.what());
    }
    const auto it = doc.metadata.find("name");
    if (it == doc.metadata.end() || it->second != name)
      throw corrupt("metadata name does not match '" + name + "'");
    const GraphCheck check = check_noncomm_graph(doc.space);
    if (!check.ok()) throw corrupt("not a noncommutative graph: " + check.diagnostic());
    const NoncommGraph reference = graph_from_name(name);
    if (reference.space().rows() != doc.space.rows() ||
        projector_distance(reference.space(), doc.space) >= 1e-9)
      throw corrupt("span differs from the canonical '" + name + "'");
    out.push_back({name, file, NoncommGraph(std::move(doc.space))});
  }
  return out;
}

}  // namespace zequa
