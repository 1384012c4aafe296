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


#include "detgb/corpus.hpp"

namespace detgb {

namespace {

MatrixSpec explicit_spec(int rows, int cols, std::vector<std::string> vars,
                         std::vector<std::vector<std::string>> entries) {
  MatrixSpec s;
  s.rows = rows;
  s.cols = cols;
  s.variables = std::move(vars);
  s.entries = std::move(entries);
  return s;
}

MatrixSpec graded_spec(int rows, int cols, MatrixGrading g, std::vector<std::vector<std::string>> entries) {
  MatrixSpec s;
  s.rows = rows;
  s.cols = cols;
  s.grading = g;
  s.entries = std::move(entries);
  return s;
}

MatrixSpec generic_spec(int rows, int cols, MatrixGrading g) {
  MatrixSpec s;
  s.rows = rows;
  s.cols = cols;
  s.grading = g;
  if (g != MatrixGrading::kNone) s.seed = 1;
  return s;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  out.push_back({"remark13a", "2x3 matrix whose minors are not a universal basis; codimension 2",
                 explicit_spec(2, 3, {"x1", "x2", "x3"}, {{"x1+x2", "x3", "x3"}, {"0", "x1", "x2"}})});
  out.push_back({"remark13b", "2x3 matrix in six variables; degrevlex initial ideal has a cubic generator",
                 explicit_spec(2, 3, {"x1", "x2", "x3", "x4", "x5", "x6"},
                               {{"x1", "x4", "x3"}, {"x5", "x1+x6", "x2"}})});
  MatrixSpec rg = generic_spec(2, 3, MatrixGrading::kRow);
  out.push_back({"rowgraded-2x3", "generic row-graded 2x3 matrix, seed 1", rg});
  const std::pair<int, int> shapes[] = {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
  for (auto [m, n] : shapes) {
    std::string shape = std::to_string(m) + "x" + std::to_string(n);
    out.push_back({"variables-" + shape, "matrix of distinct variables", generic_spec(m, n, MatrixGrading::kNone)});
    out.push_back({"column-" + shape, "generic column-graded matrix, seed 1", generic_spec(m, n, MatrixGrading::kColumn)});
    out.push_back({"row-" + shape, "generic row-graded matrix, seed 1", generic_spec(m, n, MatrixGrading::kRow)});
  }
  out.push_back({"zero-column-2x3", "column-graded 2x3 matrix with a zero column",
                 graded_spec(2, 3, MatrixGrading::kColumn,
                             {{"x_1_1 + 2*x_2_1", "0", "x_1_3 - x_2_3"},
                              {"3*x_1_1 + x_2_1", "0", "x_1_3 + x_2_3"}})});
  out.push_back({"vanishing-minor-2x4", "column-graded 2x4 matrix whose minor [3,4] vanishes",
                 graded_spec(2, 4, MatrixGrading::kColumn,
                             {{"x_1_1 + x_2_1", "2*x_1_2 + x_2_2", "x_1_3 + 2*x_2_3", "x_1_4 - x_2_4"},
                              {"x_1_1 - 2*x_2_1", "x_1_2 + 5*x_2_2", "3*x_1_3 + 6*x_2_3", "3*x_1_4 - 3*x_2_4"}})});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::optional<CorpusEntry> find_corpus_entry(std::string_view name) {
  for (const auto& e : corpus_entries()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

}  // namespace detgb
