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


#ifndef DETGB_MATRIX_FILE_HPP_
#define DETGB_MATRIX_FILE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/determinantal.hpp"

namespace detgb {

// On-disk description of a matrix of linear forms (JSON). Either explicit
// entries or a seed for the generic builders must be present, except for
// the variable matrix which needs neither.
struct MatrixSpec {
  int rows = 0;
  int cols = 0;
  MatrixGrading grading = MatrixGrading::kNone;
  Field field = Field::default_field();
  // Custom variable names; implies explicit mode with the standard grading.
  std::optional<std::vector<std::string>> variables;
  std::optional<std::vector<std::vector<std::string>>> entries;
  std::optional<std::uint64_t> seed;
};

// Throws kParse on malformed JSON or unknown keys, kInvalidArgument on
// inconsistent fields.
MatrixSpec parse_matrix_spec(std::string_view json_text);
std::string matrix_spec_to_json(const MatrixSpec& spec);
MatrixSpec read_matrix_spec(const std::string& path);

MatrixMode spec_mode(const MatrixSpec& spec);
LinearMatrix build_matrix(const MatrixSpec& spec);

}  // namespace detgb

#endif  // DETGB_MATRIX_FILE_HPP_
