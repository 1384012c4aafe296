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


#include "detgb/report.hpp"

#include <algorithm>

namespace detgb {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kPreconditionFailed:
      return "precondition-failed";
    case Verdict::kSkipped:
      return "skipped";
    case Verdict::kFail:
      return "fail";
  }
  return "fail";
}

Claim& Report::add(std::string name, bool holds, Json detail) {
  return add(std::move(name), holds ? Verdict::kPass : Verdict::kFail, std::move(detail));
}

Claim& Report::add(std::string name, Verdict verdict, Json detail) {
  claims.push_back(Claim{std::move(name), verdict, std::move(detail)});
  return claims.back();
}

Verdict Report::verdict() const {
  Verdict worst = Verdict::kPass;
  for (const auto& c : claims) worst = std::max(worst, c.verdict);
  return worst;
}

Json Report::to_json() const {
  Json j;
  j["driver"] = driver;
  j["inputs"] = inputs;
  j["artifacts"] = artifacts;
  Json cs = Json::array();
  for (const auto& c : claims) {
    cs.push_back({{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
  }
  j["claims"] = std::move(cs);
  j["verdict"] = verdict_name(verdict());
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

Json to_json(const MonomialIdeal& ideal) { return ideal.to_strings(); }

Json to_json(const BettiTable& table, const Grading& grading) {
  Json j;
  j["totals"] = table.totals();
  Json graded = Json::array();
  for (const auto& [key, count] : table.coarse()) graded.push_back({key.first, key.second, count});
  j["graded"] = std::move(graded);
  Json multi = Json::array();
  for (const auto& [key, count] : table.by_block(grading)) multi.push_back({key.first, key.second, count});
  j["multigraded"] = std::move(multi);
  return j;
}

Json to_json(const LaurentPoly& k) {
  Json j = Json::array();
  for (const auto& [e, c] : k.pairs()) {
    if (c.fits_slong_p()) {
      j.push_back({e, c.get_si()});
    } else {
      j.push_back({e, c.get_str()});
    }
  }
  return j;
}

Json to_json(const std::vector<Polynomial>& polys) {
  Json j = Json::array();
  for (const auto& p : polys) j.push_back(p.to_string());
  return j;
}

Json to_json(const WeightVector& w) {
  Json j = Json::array();
  for (const auto& x : w) j.push_back(x.get_str());
  return j;
}

}  // namespace detgb
