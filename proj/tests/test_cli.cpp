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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

int detgb(const std::string& args) {
  std::string cmd = std::string(DETGB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("detgb_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const std::string kCorpus = DETGB_CORPUS_DIR;

TEST_CASE("verify on the 2x4 variable matrix exits 0", "[cli]") { CHECK(detgb("verify thm-1.1 --m 2 --n 4") == 0); }

TEST_CASE("remark matrix fails the universal check with details", "[cli]") {
  TempDir dir;
  CHECK(detgb("universal-check " + kCorpus + "/remark13a.mat --out " + (dir / "u.json")) == 1);
  auto j = nlohmann::json::parse(slurp(dir / "u.json"));
  CHECK(j["verdict"] == "fail");
  CHECK(slurp(dir / "u.json").find("normal_form") != std::string::npos);
}

TEST_CASE("closed and matrix K-polynomials agree", "[cli]") {
  TempDir dir;
  REQUIRE(detgb("hilbert --closed 2 3 --out " + (dir / "a.json")) == 0);
  REQUIRE(detgb("hilbert " + kCorpus + "/rowgraded-2x3.mat --out " + (dir / "b.json")) == 0);
  auto a = nlohmann::json::parse(slurp(dir / "a.json")), b = nlohmann::json::parse(slurp(dir / "b.json"));
  CHECK(a["artifacts"]["k_polynomial"] == b["artifacts"]["k_polynomial"]);
  CHECK_FALSE(a["artifacts"]["k_polynomial"].empty());
}

TEST_CASE("matrix argument forms", "[cli]") {
  CHECK(detgb("gb corpus:column-2x3") == 0);
  CHECK(detgb("gb column-2x3") == 0);
  CHECK(detgb("gb " + kCorpus + "/column-2x3.mat --order lex") == 0);
  CHECK(detgb("betti variables-2x4") == 0);
  CHECK(detgb("matroid vanishing-minor-2x4") == 0);
  CHECK(detgb("gin column-2x3 --trials 2") == 0);
  CHECK(detgb("initials variables-2x3") == 0);
  CHECK(detgb("corpus list") == 0);
  CHECK(detgb("corpus show remark13b") == 0);
}

TEST_CASE("precondition failures exit 0, guardrails and usage errors exit 2", "[cli]") {
  CHECK(detgb("verify thm-3.2 --matrix " + kCorpus + "/zero-column-2x3.mat") == 0);
  CHECK(detgb("universal-check column-2x3 --max-markings 2") == 2);
  CHECK(detgb("") == 2);
  CHECK(detgb("frobnicate") == 2);
  CHECK(detgb("verify no-such-driver") == 2);
  CHECK(detgb("gb /nonexistent/file.mat") == 2);
  CHECK(detgb("gb column-2x3 --field fp:4") == 2);
  CHECK(detgb("gb column-2x3 --order sideways") == 2);
  CHECK(detgb("corpus show nothing") == 2);
}

TEST_CASE("reports are byte-identical and timing is opt-in", "[cli]") {
  TempDir dir;
  REQUIRE(detgb("verify thm-3.1 --seeds 1 --out " + (dir / "a.json")) == 0);
  REQUIRE(detgb("verify thm-3.1 --seeds 1 --out " + (dir / "b.json")) == 0);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(slurp(dir / "a.json").find("\"seconds\"") == std::string::npos);
  REQUIRE(detgb("verify identities --timing --out " + (dir / "c.json")) == 0);
  CHECK(slurp(dir / "c.json").find("\"seconds\"") != std::string::npos);
}

TEST_CASE("corpus show reproduces the shipped files", "[cli]") {
  TempDir dir;
  for (const char* name : {"remark13a", "row-3x5", "zero-column-2x3"}) {
    std::string out = dir / (std::string(name) + ".mat");
    std::string cmd = std::string(DETGB_CLI_PATH) + " corpus show " + name + " > " + out;
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp(out) == slurp(kCorpus + "/" + name + ".mat"));
  }
}

}  // namespace
