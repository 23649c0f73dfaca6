// Copyright 2026 The twolevel Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "twolevel/decomposition.hpp"
#include "twolevel/linalg.hpp"
#include "twolevel/qgate.hpp"

namespace twolevel {

// File formats. Complex numbers are [re, im] pairs; every parser throws ParseError on
// malformed input.
//
//   matrix:         {"d": d, "entries": [[[re, im], ...d], ...d rows]}
//   decomposition:  {"d", "permutation", "factors": [{"type", "rows", "block", "det"}],
//                    "residual", "mode": "auto" | "prescribed"}
//   circuit:        {"n", "gates": [{"target", "controls": [{"qubit", "value"}], "v"}]}
//   state, mus:     [[re, im], ...]

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Decomposition& dec);
nlohmann::json to_json(const Circuit& c);
nlohmann::json complex_array_to_json(std::span<const Complex> values);

Matrix matrix_from_json(const nlohmann::json& j);
Decomposition decomposition_from_json(const nlohmann::json& j);
/// Checks gate structure only; a non-unitary V is left for verify_circuit to report.
Circuit circuit_from_json(const nlohmann::json& j);
std::vector<Complex> complex_array_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file. Throws ParseError when it is missing or malformed.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Pretty-printed JSON followed by a newline.
std::string dump(const nlohmann::json& j);

}  // namespace twolevel
