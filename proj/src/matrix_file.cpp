// Copyright 2026 The Authors.
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


#include "detgb/matrix_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "detgb/error.hpp"

namespace detgb {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"rows", "cols", "grading", "field", "variables", "entries", "seed"};

int positive_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() < 1 ||
      j[key].get<std::int64_t>() > 64) {
    throw Error(ErrorKind::kParse, std::string("'") + key + "' must be an integer in 1..64");
  }
  return j[key].get<int>();
}

}  // namespace

MatrixSpec parse_matrix_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("matrix file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::kParse, "matrix file must hold a JSON object");
  for (const auto& item : j.items()) {
    if (!kKeys.count(item.key())) throw Error(ErrorKind::kParse, "unknown key '" + item.key() + "'");
  }
  MatrixSpec spec;
  spec.rows = positive_int(j, "rows");
  spec.cols = positive_int(j, "cols");
  try {
    if (j.contains("grading")) spec.grading = parse_grading(j["grading"].get<std::string>());
    if (j.contains("field")) spec.field = Field::parse(j["field"].get<std::string>());
    if (j.contains("variables")) spec.variables = j["variables"].get<std::vector<std::string>>();
    if (j.contains("entries")) spec.entries = j["entries"].get<std::vector<std::vector<std::string>>>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("matrix file: ") + e.what());
  }
  if (spec.entries) {
    if (static_cast<int>(spec.entries->size()) != spec.rows) {
      throw Error(ErrorKind::kInvalidArgument, "entries do not have 'rows' rows");
    }
    for (const auto& row : *spec.entries) {
      if (static_cast<int>(row.size()) != spec.cols) {
        throw Error(ErrorKind::kInvalidArgument, "entries do not have 'cols' columns");
      }
    }
  }
  if (spec.variables && spec.grading != MatrixGrading::kNone) {
    throw Error(ErrorKind::kInvalidArgument, "custom variables require grading 'none'");
  }
  if (spec.variables && !spec.entries) {
    throw Error(ErrorKind::kInvalidArgument, "custom variables require entries");
  }
  if (spec.grading != MatrixGrading::kNone && !spec.entries && !spec.seed) {
    throw Error(ErrorKind::kInvalidArgument, "graded matrix needs entries or a seed");
  }
  if (spec.entries && spec.seed) {
    throw Error(ErrorKind::kInvalidArgument, "give either entries or a seed, not both");
  }
  return spec;
}

std::string matrix_spec_to_json(const MatrixSpec& spec) {
  json j;
  j["rows"] = spec.rows;
  j["cols"] = spec.cols;
  j["grading"] = std::string(grading_name(spec.grading));
  j["field"] = spec.field.spec();
  if (spec.variables) j["variables"] = *spec.variables;
  if (spec.entries) j["entries"] = *spec.entries;
  if (spec.seed) j["seed"] = *spec.seed;
  return j.dump(2) + "\n";
}

MatrixSpec read_matrix_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_matrix_spec(text.str());
}

MatrixMode spec_mode(const MatrixSpec& spec) {
  if (spec.variables) return MatrixMode::kExplicit;
  switch (spec.grading) {
    case MatrixGrading::kColumn:
      return MatrixMode::kColumnGraded;
    case MatrixGrading::kRow:
      return MatrixMode::kRowGraded;
    case MatrixGrading::kNone:
      break;
  }
  return spec.entries ? MatrixMode::kExplicit : MatrixMode::kVariables;
}

LinearMatrix build_matrix(const MatrixSpec& spec) {
  MatrixMode mode = spec_mode(spec);
  if (spec.variables) {
    return parse_matrix(Ring::make(*spec.variables, spec.field), mode, *spec.entries);
  }
  if (spec.entries) {
    return parse_matrix(matrix_ring(spec.rows, spec.cols, spec.grading, spec.field), mode, *spec.entries);
  }
  switch (mode) {
    case MatrixMode::kColumnGraded:
      return generic_column_graded(spec.rows, spec.cols, spec.field, *spec.seed);
    case MatrixMode::kRowGraded:
      return generic_row_graded(spec.rows, spec.cols, spec.field, *spec.seed);
    default:
      return variable_matrix(spec.rows, spec.cols, spec.field);
  }
}

}  // namespace detgb
