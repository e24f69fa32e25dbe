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

// JSON payloads for results, with a fixed key order so that identical runs
// serialize to identical bytes.

#include <json.hpp>

#include "zequa/activation.hpp"
#include "zequa/capacity.hpp"
#include "zequa/rankone.hpp"
#include "zequa/search.hpp"
#include "zequa/subspace.hpp"

namespace zequa {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v);  // [[re, im], ...]
Json to_json(const SearchConfig& cfg);
Json to_json(const GraphCheck& check);
Json to_json(const RankOneResult& r);
Json to_json(const Codebook& c);
Json to_json(const CapacityReport& r);
Json to_json(const TensorPowerReport& r);
Json to_json(const ActivationReport& r);
Json to_json(const FamilyVerification& v);
Json to_json(const BilinearSearch& b);
Json to_json(const Lemma5Check& c);
Json to_json(const QubitSuite& s);

/// Shape, dimension and graph status of a subspace.
Json describe(const OperatorSubspace& s);

}  // namespace zequa
