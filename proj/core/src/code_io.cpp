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

#include "graphstab/code_io.hpp"

#include <fstream>
#include <sstream>

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

using nlohmann::json;

std::uint64_t read_count(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("missing key \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ValidationError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

Field read_field(const json& doc) {
  const auto p = read_count(doc, "p");
  if (p > Field::kMaxModulus) throw ValidationError("\"p\" is too large");
  try {
    return Field(static_cast<std::uint32_t>(p));
  } catch (const UsageError& e) {
    throw ValidationError(e.what());
  }
}

std::vector<Vector> read_rows(const json& doc, const char* key, const Field& field,
                              std::size_t row_length) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw ValidationError(std::string("\"") + key + "\" must be an array of rows");
  }
  std::vector<Vector> rows;
  for (const auto& row : doc.at(key)) {
    if (!row.is_array() || row.size() != row_length) {
      throw ValidationError(std::string("every row of \"") + key + "\" must have " +
                            std::to_string(row_length) + " entries");
    }
    Vector out;
    out.reserve(row_length);
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0 ||
          e.get<std::uint64_t>() >= field.p()) {
        throw ValidationError(std::string("entries of \"") + key + "\" must be integers in [0, " +
                              std::to_string(field.p()) + ")");
      }
      out.push_back(static_cast<Elem>(e.get<std::uint64_t>()));
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<Elem>(row.begin(), row.end()));
  }
  return rows;
}

}  // namespace

json to_json(const GraphCode& g) {
  return {{"p", g.field().p()},
          {"inputs", g.inputs()},
          {"aux", g.aux()},
          {"outputs", g.outputs()},
          {"gamma", matrix_rows(g.gamma())}};
}

json to_json(const StabilizerSpace& s) {
  return {{"p", s.field().p()}, {"n", s.n()}, {"generators", matrix_rows(s.space().basis())}};
}

GraphCode graph_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("graph file must be a JSON object");
  const Field field = read_field(doc);
  const auto inputs = read_count(doc, "inputs");
  const auto aux = read_count(doc, "aux");
  const auto outputs = read_count(doc, "outputs");
  const auto n = inputs + aux + outputs;
  const auto rows = read_rows(doc, "gamma", field, n);
  if (rows.size() != n) {
    throw ValidationError("\"gamma\" must have inputs+aux+outputs = " + std::to_string(n) +
                          " rows");
  }
  return GraphCode(field, inputs, aux, outputs, Matrix::from_rows(field, n, rows));
}

StabilizerSpace stabilizer_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("stabilizer file must be a JSON object");
  const Field field = read_field(doc);
  const auto n = read_count(doc, "n");
  const auto rows = read_rows(doc, "generators", field, 2 * n);
  return StabilizerSpace(field, n, rows);
}

CodeFile code_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("code file must be a JSON object");
  const bool graph = doc.contains("gamma");
  const bool stab = doc.contains("generators");
  if (graph == stab) {
    throw ValidationError("code file must contain exactly one of \"gamma\" or \"generators\"");
  }
  if (graph) return {graph_from_json(doc)};
  return {stabilizer_from_json(doc)};
}

CodeFile load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return code_from_json(doc);
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace graphstab
