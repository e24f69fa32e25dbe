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

#include "zequa/catalog.hpp"

#include <charconv>
#include <cmath>

#include "zequa/activation.hpp"
#include "zequa/errors.hpp"

namespace zequa {

namespace {

[[noreturn]] void bad_name(std::string_view name, const std::string& why) {
  throw Error(ErrorKind::parse, "graph name '" + std::string(name) + "': " + why);
}

long parse_int(std::string_view name, std::string_view text) {
  long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    bad_name(name, "expected an integer after ':'");
  return value;
}

double parse_real(std::string_view name, std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty() ||
      !std::isfinite(value))
    bad_name(name, "expected a real number after ':'");
  return value;
}

void check_cap(std::string_view name, long ambient, std::size_t max_ambient) {
  if (static_cast<std::size_t>(ambient) > max_ambient)
    throw Error(ErrorKind::size, "graph name '" + std::string(name) + "': ambient " +
                                     std::to_string(ambient) + " exceeds cap " +
                                     std::to_string(max_ambient));
}

}  // namespace

NoncommGraph graph_from_name(std::string_view name, std::size_t max_ambient) {
  if (name == "pauli:I2") return canonical::scalar(2);
  if (name == "pauli:I-Z") return canonical::identity_z();
  if (name == "pauli:I-X-Z") return canonical::identity_xz();

  const auto colon = name.find(':');
  if (colon == std::string_view::npos) bad_name(name, "unknown graph");
  const std::string_view kind = name.substr(0, colon);
  const std::string_view arg = name.substr(colon + 1);
  if (kind == "full") {
    const long n = parse_int(name, arg);
    if (n < 1) bad_name(name, "n must be positive");
    check_cap(name, n, max_ambient);
    return canonical::full(n);
  }
  if (kind == "dephasing") {
    const double p = parse_real(name, arg);
    if (p < 0.0 || p > 1.0) bad_name(name, "p must lie in [0, 1]");
    return canonical::dephasing(p);
  }
  if (kind == "familyT") {
    const long m = parse_int(name, arg);
    if (m < 3) bad_name(name, "m must be at least 3");
    check_cap(name, m + 1, max_ambient);
    return family_t(static_cast<int>(m)).t;
  }
  bad_name(name, "unknown graph");
}

bool is_canonical_name(std::string_view name) {
  try {
    graph_from_name(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> corpus_names() {
  return {"pauli:I2",       "pauli:I-Z",      "pauli:I-X-Z",    "full:2",
          "dephasing:0.1",  "dephasing:0.3",  "dephasing:0.5",  "familyT:3",
          "familyT:4",      "familyT:5"};
}

}  // namespace zequa
