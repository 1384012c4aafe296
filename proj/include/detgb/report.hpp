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


#ifndef DETGB_REPORT_HPP_
#define DETGB_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "detgb/betti.hpp"
#include "detgb/hilbert.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

using Json = nlohmann::json;

// Ordered from best to worst; a report takes the worst verdict of its claims.
enum class Verdict { kPass, kPreconditionFailed, kSkipped, kFail };

std::string_view verdict_name(Verdict v);

struct Claim {
  std::string name;
  Verdict verdict = Verdict::kPass;
  Json detail = Json::object();
};

struct Report {
  std::string driver;
  Json inputs = Json::object();
  std::vector<Claim> claims;
  Json artifacts = Json::object();
  std::optional<double> seconds;

  Claim& add(std::string name, bool holds, Json detail = Json::object());
  Claim& add(std::string name, Verdict verdict, Json detail = Json::object());
  Verdict verdict() const;
  Json to_json() const;
  // Pretty-printed with sorted keys and a trailing newline.
  std::string dump() const;
};

Json to_json(const MonomialIdeal& ideal);
Json to_json(const BettiTable& table, const Grading& grading);
Json to_json(const LaurentPoly& k);
Json to_json(const std::vector<Polynomial>& polys);
Json to_json(const WeightVector& w);

}  // namespace detgb

#endif  // DETGB_REPORT_HPP_
