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

// Canonical graphs by name:
//   pauli:I2      C I_2
//   pauli:I-Z     span{I, sigma_3}
//   pauli:I-X-Z   span{I, sigma_1, sigma_3}
//   full:n        L(C^n)
//   dephasing:p   span{I, sigma_2} from the dephasing channel, p in [0, 1]
//   familyT:m     the activating family on C^{m+1}

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zequa/subspace.hpp"

namespace zequa {

struct NamedGraph {
  std::string name;
  NoncommGraph graph;
};

/// Throws Error(parse) for an unknown or malformed name and Error(size) when
/// the ambient dimension exceeds max_ambient.
NoncommGraph graph_from_name(std::string_view name,
                             std::size_t max_ambient = kDefaultMaxAmbient);

bool is_canonical_name(std::string_view name);

/// The persisted corpus: four qubit classes, dephasing at p = 0.1, 0.3, 0.5
/// and familyT:3..5.
std::vector<std::string> corpus_names();

}  // namespace zequa
