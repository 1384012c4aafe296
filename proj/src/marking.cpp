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

#include "detgb/marking.hpp"

#include "detgb/error.hpp"

namespace detgb {

namespace {

IntRow difference(const Monomial& a, const Monomial& b) {
  IntRow r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::int64_t>(a[i]) - b[i];
  return r;
}

bool satisfies(const WeightVector& w, const IntRow& row) {
  mpz_class d = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) d += w[i] * static_cast<long>(row[i]);
  }
  return d > 0;
}

// A chosen term that strictly divides another term can never lead.
bool can_lead(const Polynomial& g, std::size_t index) {
  const Monomial& t = g.terms()[index].monomial;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k != index && t.divides(g.terms()[k].monomial)) return false;
  }
  return true;
}

}  // namespace

std::vector<IntRow> marking_rows(const Polynomial& g, std::size_t chosen_index) {
  std::vector<IntRow> rows;
  const Monomial& t = g.terms()[chosen_index].monomial;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k != chosen_index) rows.push_back(primitive_row(difference(t, g.terms()[k].monomial)));
  }
  return rows;
}

bool witness_separates(const WeightVector& w, const std::vector<Polynomial>& gens,
                       const std::vector<std::size_t>& chosen_index) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& row : marking_rows(gens[i], chosen_index[i])) {
      if (!satisfies(w, row)) return false;
    }
  }
  for (const auto& x : w) {
    if (x <= 0) return false;
  }
  return true;
}

void for_each_realizable_marking(const std::vector<Polynomial>& gens, std::uint64_t cap,
                                 const std::function<void(const Marking&)>& visit,
                                 MarkingSearchStats* stats) {
  MarkingSearchStats local;
  MarkingSearchStats& st = stats ? *stats : local;
  if (gens.empty()) return;
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "cannot mark a zero generator");
  }
  std::size_t n = gens.front().ring().num_vars();
  std::vector<IntRow> base = positivity_rows(n);
  WeightVector start(n, 1);

  std::vector<std::size_t> chosen(gens.size(), 0);
  // Each level keeps the rows accumulated so far and a witness for them.
  auto dfs = [&](auto&& self, std::size_t depth, const std::vector<IntRow>& rows,
                 const WeightVector& witness) -> void {
    if (depth == gens.size()) {
      Marking mk;
      mk.chosen_index = chosen;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        mk.chosen.push_back(gens[i].terms()[chosen[i]].monomial);
      }
      mk.witness = witness;
      visit(mk);
      return;
    }
    const Polynomial& g = gens[depth];
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (++st.candidates_examined > cap) {
        throw Error(ErrorKind::kGuardrail, "marking enumeration exceeded " + std::to_string(cap) +
                                               " candidates");
      }
      if (!can_lead(g, t)) continue;
      std::vector<IntRow> extra = marking_rows(g, t);
      bool reuse = true;
      for (const auto& row : extra) {
        if (!satisfies(witness, row)) {
          reuse = false;
          break;
        }
      }
      std::vector<IntRow> next = rows;
      next.insert(next.end(), extra.begin(), extra.end());
      chosen[depth] = t;
      if (reuse) {
        self(self, depth + 1, next, witness);
        continue;
      }
      ++st.feasibility_checks;
      auto w = solve_strict(next, n);
      if (w) self(self, depth + 1, next, *w);
    }
  };
  dfs(dfs, 0, base, start);
}

std::vector<Marking> realizable_markings(const std::vector<Polynomial>& gens, std::uint64_t cap,
                                         MarkingSearchStats* stats) {
  std::vector<Marking> out;
  for_each_realizable_marking(gens, cap, [&](const Marking& m) { out.push_back(m); }, stats);
  return out;
}

}  // namespace detgb
