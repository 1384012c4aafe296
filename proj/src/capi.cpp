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


#include "detgb/detgb.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "detgb/corpus.hpp"
#include "detgb/drivers.hpp"
#include "detgb/error.hpp"
#include "detgb/matrix_file.hpp"

struct detgb_matrix {
  std::optional<detgb::MatrixSpec> spec;
  detgb::LinearMatrix matrix;
};

struct detgb_report {
  detgb::Report report;
  std::string json;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

detgb_status status_of(detgb::ErrorKind kind) {
  using detgb::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse:
      return DETGB_PARSE;
    case ErrorKind::kIo:
      return DETGB_IO;
    case ErrorKind::kGuardrail:
      return DETGB_GUARDRAIL;
    case ErrorKind::kPrecondition:
      return DETGB_PRECONDITION;
    default:
      return DETGB_INVALID;
  }
}

template <class F>
detgb_status guarded(char** err, F&& body) {
  if (err) *err = nullptr;
  try {
    body();
    return DETGB_OK;
  } catch (const detgb::Error& e) {
    if (err) *err = dup(e.what());
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    if (err) *err = dup("out of memory");
    return DETGB_INTERNAL;
  } catch (const std::exception& e) {
    if (err) *err = dup(e.what());
    return DETGB_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw detgb::Error(detgb::ErrorKind::kInvalidArgument, std::string(what) + " is NULL");
}

detgb_matrix* from_spec(const detgb::MatrixSpec& spec) {
  return new detgb_matrix{spec, detgb::build_matrix(spec)};
}

detgb::Field field_or_default(const char* field) {
  return field ? detgb::Field::parse(field) : detgb::Field::default_field();
}

}  // namespace

extern "C" {

const char* detgb_version(void) { return "0.1.0"; }

const char* detgb_status_string(detgb_status status) {
  switch (status) {
    case DETGB_OK:
      return "ok";
    case DETGB_INVALID:
      return "invalid argument";
    case DETGB_PARSE:
      return "parse error";
    case DETGB_IO:
      return "i/o error";
    case DETGB_GUARDRAIL:
      return "guardrail";
    case DETGB_PRECONDITION:
      return "precondition failed";
    case DETGB_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

detgb_status detgb_matrix_from_file(const char* path, detgb_matrix** out, char** err) {
  return guarded(err, [&] {
    require(path, "path");
    require(out, "out");
    *out = from_spec(detgb::read_matrix_spec(path));
  });
}

detgb_status detgb_matrix_from_text(const char* json, detgb_matrix** out, char** err) {
  return guarded(err, [&] {
    require(json, "json");
    require(out, "out");
    *out = from_spec(detgb::parse_matrix_spec(json));
  });
}

detgb_status detgb_matrix_from_corpus(const char* name, detgb_matrix** out, char** err) {
  return guarded(err, [&] {
    require(name, "name");
    require(out, "out");
    auto entry = detgb::find_corpus_entry(name);
    if (!entry) throw detgb::Error(detgb::ErrorKind::kInvalidArgument, std::string("no corpus entry '") + name + "'");
    *out = from_spec(entry->spec);
  });
}

detgb_status detgb_matrix_generic(int rows, int cols, const char* grading, const char* field,
                                  unsigned long long seed, detgb_matrix** out, char** err) {
  return guarded(err, [&] {
    require(grading, "grading");
    require(out, "out");
    detgb::MatrixSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.grading = detgb::parse_grading(grading);
    if (spec.grading == detgb::MatrixGrading::kNone) {
      throw detgb::Error(detgb::ErrorKind::kInvalidArgument, "generic matrices are column- or row-graded");
    }
    spec.field = field_or_default(field);
    spec.seed = seed;
    if (rows < 1 || cols < 1) throw detgb::Error(detgb::ErrorKind::kInvalidArgument, "empty matrix");
    *out = from_spec(spec);
  });
}

detgb_status detgb_matrix_variables(int rows, int cols, const char* field, detgb_matrix** out, char** err) {
  return guarded(err, [&] {
    require(out, "out");
    if (rows < 1 || cols < 1) throw detgb::Error(detgb::ErrorKind::kInvalidArgument, "empty matrix");
    detgb::MatrixSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.field = field_or_default(field);
    *out = from_spec(spec);
  });
}

detgb_status detgb_matrix_set_field(detgb_matrix* matrix, const char* field, char** err) {
  return guarded(err, [&] {
    require(matrix, "matrix");
    require(field, "field");
    detgb::MatrixSpec spec = *matrix->spec;
    spec.field = detgb::Field::parse(field);
    matrix->matrix = detgb::build_matrix(spec);
    matrix->spec = spec;
  });
}

int detgb_matrix_rows(const detgb_matrix* matrix) { return matrix ? matrix->matrix.rows() : 0; }

int detgb_matrix_cols(const detgb_matrix* matrix) { return matrix ? matrix->matrix.cols() : 0; }

char* detgb_matrix_to_text(const detgb_matrix* matrix) {
  if (!matrix) return nullptr;
  try {
    return dup(detgb::matrix_spec_to_json(*matrix->spec));
  } catch (...) {
    return nullptr;
  }
}

void detgb_matrix_free(detgb_matrix* matrix) { delete matrix; }

char* detgb_corpus_list(void) {
  std::string out;
  for (const auto& e : detgb::corpus_entries()) out += e.name + "\n";
  return dup(out);
}

detgb_status detgb_run(const char* command, const detgb_matrix* matrix, const char* options_json,
                       detgb_report** out, char** err) {
  return guarded(err, [&] {
    require(command, "command");
    require(out, "out");
    detgb::Json opts;
    if (options_json) {
      try {
        opts = detgb::Json::parse(options_json);
      } catch (const detgb::Json::exception& e) {
        throw detgb::Error(detgb::ErrorKind::kParse, std::string("options: ") + e.what());
      }
    }
    detgb::RunOptions o = detgb::parse_run_options(opts);
    detgb::Report r = detgb::run_command(command, matrix ? &matrix->matrix : nullptr, o);
    auto* rep = new detgb_report{std::move(r), {}};
    rep->json = rep->report.dump();
    *out = rep;
  });
}

detgb_verdict detgb_report_verdict(const detgb_report* report) {
  if (!report) return DETGB_FAIL;
  switch (report->report.verdict()) {
    case detgb::Verdict::kPass:
      return DETGB_PASS;
    case detgb::Verdict::kSkipped:
      return DETGB_SKIPPED;
    case detgb::Verdict::kPreconditionFailed:
      return DETGB_PRECONDITION_FAILED;
    case detgb::Verdict::kFail:
      return DETGB_FAIL;
  }
  return DETGB_FAIL;
}

const char* detgb_report_json(const detgb_report* report) { return report ? report->json.c_str() : nullptr; }

void detgb_report_set_seconds(detgb_report* report, double seconds) {
  if (!report) return;
  report->report.seconds = seconds;
  report->json = report->report.dump();
}

void detgb_report_free(detgb_report* report) { delete report; }

void detgb_string_free(char* s) { std::free(s); }

}  // extern "C"
