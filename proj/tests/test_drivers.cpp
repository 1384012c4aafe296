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

#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "detgb/betti.hpp"
#include "detgb/corpus.hpp"
#include "detgb/drivers.hpp"
#include "detgb/error.hpp"
#include "detgb/matrix_file.hpp"
#include "detgb/parser.hpp"

namespace detgb {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kInvalidArgument;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict claim_verdict(const Report& r, const std::string& name) {
  for (const auto& c : r.claims) {
    if (c.name == name) return c.verdict;
  }
  FAIL("missing claim " << name);
  return Verdict::kFail;
}

TEST_CASE("matrix spec parsing and validation", "[matrix-file]") {
  MatrixSpec s = parse_matrix_spec(R"({"rows": 2, "cols": 3, "grading": "column", "seed": 4})");
  CHECK(s.rows == 2);
  CHECK(s.grading == MatrixGrading::kColumn);
  CHECK(s.seed == std::optional<std::uint64_t>(4));
  CHECK(spec_mode(s) == MatrixMode::kColumnGraded);
  CHECK(parse_matrix_spec(matrix_spec_to_json(s)).seed == s.seed);
  CHECK(spec_mode(parse_matrix_spec(R"({"rows": 2, "cols": 3})")) == MatrixMode::kVariables);
  CHECK(kind_of([] { parse_matrix_spec("{"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { parse_matrix_spec(R"({"rows": 2, "cols": 3, "colour": 1})"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { parse_matrix_spec(R"({"rows": "2", "cols": 3})"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { parse_matrix_spec(R"({"rows": 2, "cols": 3, "grading": "row"})"); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { parse_matrix_spec(R"({"rows": 2, "cols": 3, "grading": "diagonal", "seed": 1})"); }) ==
        ErrorKind::kParse);
  CHECK(kind_of([] { parse_matrix_spec(R"({"rows": 1, "cols": 2, "variables": ["a", "b"]})"); }) ==
        ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { read_matrix_spec("/nonexistent/matrix.mat"); }) == ErrorKind::kIo);
}

TEST_CASE("explicit matrices with custom variables", "[matrix-file]") {
  MatrixSpec s = parse_matrix_spec(
      R"({"rows": 1, "cols": 2, "variables": ["a", "b"], "entries": [["a + b", "2*a"]], "field": "q"})");
  CHECK(spec_mode(s) == MatrixMode::kExplicit);
  LinearMatrix l = build_matrix(s);
  CHECK(l.ring().field() == Field::rationals());
  CHECK(l.entry(0, 1).to_string() == "2*a");
  MatrixSpec bad = s;
  bad.entries = std::vector<std::vector<std::string>>{{"a*b", "a"}};
  CHECK_THROWS_AS(build_matrix(bad), Error);
}

TEST_CASE("shipped corpus files equal the built-in entries", "[corpus]") {
  REQUIRE(corpus_entries().size() == 20);
  for (const auto& e : corpus_entries()) {
    INFO(e.name);
    MatrixSpec file = read_matrix_spec(std::string(DETGB_CORPUS_DIR) + "/" + e.name + ".mat");
    CHECK(matrix_spec_to_json(file) == matrix_spec_to_json(e.spec));
    CHECK(read_file(std::string(DETGB_CORPUS_DIR) + "/" + e.name + ".mat") == matrix_spec_to_json(e.spec));
    CHECK(build_matrix(file).entries() == build_matrix(e.spec).entries());
  }
  CHECK_FALSE(find_corpus_entry("no-such-matrix").has_value());
  LinearMatrix r = build_matrix(find_corpus_entry("remark13a")->spec);
  CHECK(r.entry(0, 0).to_string() == "x1 + x2");
}

TEST_CASE("report verdict takes the worst claim", "[report]") {
  Report r;
  r.driver = "demo";
  CHECK(r.verdict() == Verdict::kPass);
  r.add("a", true);
  r.add("b", Verdict::kPreconditionFailed);
  CHECK(r.verdict() == Verdict::kPreconditionFailed);
  r.add("c", Verdict::kSkipped);
  CHECK(r.verdict() == Verdict::kSkipped);
  r.add("d", false);
  CHECK(r.verdict() == Verdict::kFail);
  CHECK(verdict_name(Verdict::kPreconditionFailed) == "precondition-failed");
  Json j = r.to_json();
  CHECK(j["verdict"] == "fail");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(r.dump().back() == '\n');
  r.seconds = 1.5;
  CHECK(r.to_json()["seconds"] == 1.5);
}

TEST_CASE("run options", "[drivers]") {
  RunOptions o = parse_run_options(Json::parse(R"({"seed": 9, "max-markings": 10, "max_cones": 5, "field": "q"})"));
  CHECK(o.seed == 9);
  CHECK(o.max_markings == 10);
  CHECK(o.max_cones == 5);
  CHECK(o.field == Field::rationals());
  CHECK(kind_of([] { parse_run_options(Json::parse(R"({"sed": 9})")); }) == ErrorKind::kParse);
  CHECK(kind_of([] { parse_run_options(Json::parse(R"({"seed": "x"})")); }) == ErrorKind::kParse);
}

TEST_CASE("reports are byte-identical across runs", "[drivers][property]") {
  RunOptions o;
  o.seeds = {1};
  LinearMatrix l = build_matrix(find_corpus_entry("row-2x3")->spec);
  for (const char* command : {"gb", "universal-check", "initials", "hilbert", "gin", "betti"}) {
    INFO(command);
    CHECK(run_command(command, &l, o).dump() == run_command(command, &l, o).dump());
  }
  CHECK(run_driver("thm-3.2", nullptr, o).dump() == run_driver("thm-3.2", nullptr, o).dump());
}

TEST_CASE("drivers on small inputs", "[drivers]") {
  RunOptions o;
  o.seeds = {1};
  CHECK(run_driver("thm-1.1", nullptr, o).verdict() == Verdict::kPass);
  CHECK(run_driver("identities", nullptr, o).verdict() == Verdict::kPass);
  CHECK(run_driver("remark-1.3", nullptr, o).verdict() == Verdict::kPass);
  CHECK(run_driver("prop-4.2", nullptr, o).verdict() == Verdict::kPass);
  LinearMatrix zero = build_matrix(find_corpus_entry("zero-column-2x3")->spec);
  Report z = run_driver("thm-3.2", &zero, o);
  CHECK(z.verdict() == Verdict::kPreconditionFailed);
  CHECK(claim_verdict(z, "projective_dimension") == Verdict::kPreconditionFailed);
  LinearMatrix vanish = build_matrix(find_corpus_entry("vanishing-minor-2x4")->spec);
  CHECK(run_driver("thm-3.1", &vanish, o).verdict() == Verdict::kPreconditionFailed);
  CHECK(run_driver("thm-3.2", &vanish, o).verdict() == Verdict::kPass);
  LinearMatrix row = build_matrix(find_corpus_entry("row-2x3")->spec);
  CHECK(run_driver("thm-3.1", &row, o).verdict() == Verdict::kPreconditionFailed);
  CHECK(run_driver("thm-1.1", &row, o).verdict() == Verdict::kPreconditionFailed);
  CHECK(run_command("universal-check", &row, o).verdict() == Verdict::kFail);
  CHECK_THROWS_AS(run_command("gb", nullptr, o), Error);
  CHECK_THROWS_AS(run_driver("thm-9.9", nullptr, o), Error);
}

TEST_CASE("guardrails are reported as skipped", "[drivers]") {
  RunOptions o;
  o.max_markings = 2;
  LinearMatrix l = build_matrix(find_corpus_entry("column-2x3")->spec);
  CHECK(run_command("universal-check", &l, o).verdict() == Verdict::kSkipped);
  RunOptions cones;
  cones.seeds = {1};
  cones.max_cones = 2;
  CHECK(run_driver("thm-4.1", nullptr, cones).verdict() == Verdict::kSkipped);
}

TEST_CASE("a passing report is reconstructible from its artifacts", "[drivers][property]") {
  RunOptions o;
  LinearMatrix l = build_matrix(find_corpus_entry("column-2x4")->spec);
  Report r = run_driver("thm-3.1", &l, o);
  REQUIRE(r.verdict() == Verdict::kPass);
  Json j = Json::parse(r.dump());
  auto ring = matrix_ring(2, 4, MatrixGrading::kColumn, Field::parse(j["inputs"]["matrices"]["matrix"]["field"].get<std::string>()));
  REQUIRE(j["artifacts"]["initial_ideals"].is_array());
  REQUIRE_FALSE(j["artifacts"]["initial_ideals"].empty());
  for (const auto& ideal : j["artifacts"]["initial_ideals"]) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal) gens.push_back(parse_poly(g.get<std::string>(), ring).terms().front().monomial);
    MonomialIdeal m(ring, gens);
    CHECK(is_radical(m));
    CHECK(has_linear_resolution(m));
    CHECK(betti_table(m).totals() == eagon_northcott_ranks(2, 4));
  }
}

}  // namespace
}  // namespace detgb
