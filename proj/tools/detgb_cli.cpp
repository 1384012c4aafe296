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


// Command-line front end. Talks to the kernel only through detgb/detgb.h.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "detgb/detgb.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Globals {
  std::string field;
  unsigned long long seed = 1;
  std::string order;
  std::string out;
  unsigned long long max_markings = 1000000;
  unsigned long long max_cones = 20000;
  bool timing = false;
};

int report_error(detgb_status status, char* err) {
  std::cerr << "detgb: " << detgb_status_string(status);
  if (err) std::cerr << ": " << err;
  std::cerr << "\n";
  detgb_string_free(err);
  return status == DETGB_INTERNAL ? kExitInternal : kExitUsage;
}

// A file path, or a built-in corpus entry written as corpus:<name> or <name>.
detgb_status load_matrix(const std::string& source, const Globals& g, detgb_matrix** out, char** err) {
  detgb_status s;
  if (source.rfind("corpus:", 0) == 0) {
    s = detgb_matrix_from_corpus(source.substr(7).c_str(), out, err);
  } else if (!std::filesystem::exists(source) && source.find('/') == std::string::npos &&
             source.find('.') == std::string::npos) {
    s = detgb_matrix_from_corpus(source.c_str(), out, err);
  } else {
    s = detgb_matrix_from_file(source.c_str(), out, err);
  }
  if (s != DETGB_OK || g.field.empty()) return s;
  s = detgb_matrix_set_field(*out, g.field.c_str(), err);
  if (s != DETGB_OK) {
    detgb_matrix_free(*out);
    *out = nullptr;
  }
  return s;
}

int exit_code(detgb_verdict v) {
  switch (v) {
    case DETGB_PASS:
    case DETGB_PRECONDITION_FAILED:
      return kExitPass;
    case DETGB_FAIL:
      return kExitFail;
    case DETGB_SKIPPED:
      return kExitUsage;
  }
  return kExitFail;
}

int execute(const std::string& command, const std::string& matrix_source, nlohmann::json options,
            const Globals& g) {
  detgb_matrix* matrix = nullptr;
  char* err = nullptr;
  if (!matrix_source.empty()) {
    detgb_status s = load_matrix(matrix_source, g, &matrix, &err);
    if (s != DETGB_OK) return report_error(s, err);
  }
  if (!g.order.empty()) options["order"] = g.order;
  if (!g.field.empty()) options["field"] = g.field;
  options["seed"] = g.seed;
  options["max_markings"] = g.max_markings;
  options["max_cones"] = g.max_cones;
  std::string opts = options.dump();

  auto start = std::chrono::steady_clock::now();
  detgb_report* report = nullptr;
  detgb_status s = detgb_run(command.c_str(), matrix, opts.c_str(), &report, &err);
  detgb_matrix_free(matrix);
  if (s != DETGB_OK) return report_error(s, err);
  if (g.timing) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    detgb_report_set_seconds(report, dt.count());
  }
  const char* text = detgb_report_json(report);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f || !(f << text)) {
      detgb_report_free(report);
      std::cerr << "detgb: cannot write '" << g.out << "'\n";
      return kExitUsage;
    }
  }
  int code = exit_code(detgb_report_verdict(report));
  detgb_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for ideals of maximal minors"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Coefficient field: q or fp:<prime> (default fp:32003)");
  app.add_option("--seed", g.seed, "Seed for random choices");
  app.add_option("--order", g.order, "Term order: lex, degrevlex, weight:w1,w2,... [vars:a>b>...]");
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--max-markings", g.max_markings, "Candidate marking limit for the certificate");
  app.add_option("--max-cones", g.max_cones, "Cone limit for the Groebner fan walk");
  app.add_flag("--timing", g.timing, "Record wall-clock seconds in the report");

  std::string matrix_source;
  std::string command;
  nlohmann::json options = nlohmann::json::object();

  auto matrix_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("matrix", matrix_source, "Matrix file, or a corpus entry name")->required();
    return sub;
  };
  matrix_command("gb", "Reduced Groebner basis of the maximal minors");
  matrix_command("universal-check", "Marking certificate for the maximal minors");
  matrix_command("initials", "All initial ideals of the ideal of maximal minors");
  auto* gin = matrix_command("gin", "Multigraded generic initial ideal");
  int trials = 3;
  gin->add_option("--trials", trials, "Number of random coordinate changes");
  auto* betti = matrix_command("betti", "Betti table of an initial ideal");
  std::size_t max_generators = 20;
  betti->add_option("--max-generators", max_generators, "Generator limit for the Betti computation");
  matrix_command("matroid", "Column matroid of the maximal minors");

  auto* hilbert = app.add_subcommand("hilbert", "K-polynomial of the ideal of maximal minors");
  hilbert->add_option("matrix", matrix_source, "Matrix file, or a corpus entry name");
  std::vector<int> closed;
  hilbert->add_option("--closed", closed, "Closed formula for the generic m x n case")->expected(2);

  auto* verify = app.add_subcommand("verify", "Run a verification driver");
  std::string driver;
  verify->add_option("driver", driver, "Driver id")
      ->required()
      ->check(CLI::IsMember({"thm-1.1", "thm-3.1", "thm-3.2", "thm-4.1", "prop-4.2", "cor-2.6", "thm-2.5",
                             "lemma-2.4", "remark-1.3", "identities"}));
  int m = 0, n = 0;
  std::vector<unsigned long long> seeds;
  int verify_trials = 3;
  std::size_t expect_codim = 0;
  verify->add_option("--matrix", matrix_source, "Matrix file or corpus entry instead of generic matrices");
  verify->add_option("--m", m, "Rows of the generic matrices");
  verify->add_option("--n", n, "Columns of the generic matrices");
  verify->add_option("--seeds", seeds, "Seeds for the generic matrices");
  verify->add_option("--trials", verify_trials, "Random coordinate changes per gin");
  verify->add_option("--expect-codimension", expect_codim, "Expected codimension (remark-1.3)");
  bool all_orders = false;
  verify->add_flag("--all-orders", all_orders, "Check every term order, not only degrevlex (remark-1.3)");

  auto* corpus = app.add_subcommand("corpus", "Built-in matrices");
  auto* list = corpus->add_subcommand("list", "List corpus entries");
  auto* show = corpus->add_subcommand("show", "Print a corpus entry in the matrix file format");
  std::string show_name;
  show->add_option("name", show_name, "Corpus entry")->required();
  corpus->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (list->parsed()) {
    char* names = detgb_corpus_list();
    std::cout << (names ? names : "");
    detgb_string_free(names);
    return kExitPass;
  }
  if (show->parsed()) {
    detgb_matrix* matrix = nullptr;
    char* err = nullptr;
    detgb_status s = detgb_matrix_from_corpus(show_name.c_str(), &matrix, &err);
    if (s != DETGB_OK) return report_error(s, err);
    char* text = detgb_matrix_to_text(matrix);
    std::cout << (text ? text : "");
    detgb_string_free(text);
    detgb_matrix_free(matrix);
    return kExitPass;
  }
  if (verify->parsed()) {
    command = "verify:" + driver;
    if (m > 0) options["m"] = m;
    if (n > 0) options["n"] = n;
    if (!seeds.empty()) options["seeds"] = seeds;
    options["trials"] = verify_trials;
    if (expect_codim > 0) options["expect_codimension"] = expect_codim;
    if (all_orders) options["all_orders"] = true;
  } else {
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    if (gin->parsed()) options["trials"] = trials;
    if (betti->parsed()) options["max_generators"] = max_generators;
    if (hilbert->parsed()) {
      if (!closed.empty()) {
        options["closed"] = closed;
      } else if (matrix_source.empty()) {
        std::cerr << "detgb: hilbert needs a matrix or --closed m n\n";
        return kExitUsage;
      }
    }
  }
  return execute(command, matrix_source, std::move(options), g);
}
