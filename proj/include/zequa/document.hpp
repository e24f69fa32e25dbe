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

#pragma once

// SubspaceDocument: one operator subspace per `.ncg` file, stored as JSON.
//
//   {"schema_version": 1, "ambient_rows": 2, "ambient_cols": 2,
//    "basis": [[[[re, im], ...], ...], ...], "metadata": {"name": "..."}}
//
// Each basis matrix is a list of rows and each entry a [re, im] pair. The
// basis must be Hilbert-Schmidt orthonormal within 1e-10.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zequa/subspace.hpp"

namespace zequa {

inline constexpr int kSchemaVersion = 1;

struct SubspaceDocument {
  int schema_version = kSchemaVersion;
  OperatorSubspace space{1, 1};
  std::map<std::string, std::string> metadata;
};

std::string serialize_document(const SubspaceDocument& doc);

/// Malformed JSON or a schema mismatch throws Error(parse) with
/// "source:line:column"; a basis that is not orthonormal throws
/// Error(corrupt).
SubspaceDocument parse_document(std::string_view text,
                                const std::string& source = "<input>");

/// Throws Error(io) if the file cannot be read or written.
SubspaceDocument load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const SubspaceDocument& doc);

struct CorpusEntry {
  std::string name;
  std::filesystem::path file;
  NoncommGraph graph;
};

/// "familyT:3" -> "familyT_3.ncg".
std::string corpus_file_name(std::string_view name);

/// Writes every corpus_names() graph into `dir`, creating it if needed.
std::vector<CorpusEntry> save_corpus(const std::filesystem::path& dir);

/// Reads every corpus_names() file and re-checks it: orthonormal basis,
/// noncommutative graph, metadata name, and span equal to a freshly built
/// canonical graph (projector distance < 1e-9). Any failure throws
/// Error(corrupt) naming the file and the check.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

}  // namespace zequa
