// Copyright 2026 The graphstab Authors. All Rights Reserved.
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

#ifndef GRAPHSTAB_CODE_IO_HPP_
#define GRAPHSTAB_CODE_IO_HPP_

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "graphstab/graph_code.hpp"
#include "graphstab/stabilizer.hpp"

namespace graphstab {

// Graph file:      {"aux": int, "gamma": [[int, ...], ...], "inputs": int, "outputs": int, "p": int}
// Stabilizer file: {"generators": [[int x 2n], ...], "n": int, "p": int}
// Each generator row is (ĝ₀..ĝₙ₋₁, g₀..gₙ₋₁). Entries must lie in [0, p).
// Malformed documents throw ValidationError.

nlohmann::json to_json(const GraphCode& g);
nlohmann::json to_json(const StabilizerSpace& s);

GraphCode graph_from_json(const nlohmann::json& doc);
/// Generators are canonicalized (RREF) on load.
StabilizerSpace stabilizer_from_json(const nlohmann::json& doc);

enum class CodeKind { kGraph, kStabilizer };

/// A loaded code file; the kind is inferred from the "gamma" / "generators" key.
struct CodeFile {
  std::variant<GraphCode, StabilizerSpace> payload;

  CodeKind kind() const noexcept {
    return std::holds_alternative<GraphCode>(payload) ? CodeKind::kGraph : CodeKind::kStabilizer;
  }
};

CodeFile code_from_json(const nlohmann::json& doc);
CodeFile load_code_file(const std::filesystem::path& path);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace graphstab

#endif  // GRAPHSTAB_CODE_IO_HPP_
