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

#ifndef DETGB_MARKING_HPP_
#define DETGB_MARKING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "detgb/fourier_motzkin.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// One chosen term per generator. chosen_index refers to the generator's
// canonical (degrevlex-descending) term list.
struct Marking {
  std::vector<std::size_t> chosen_index;
  std::vector<Monomial> chosen;
  std::optional<WeightVector> witness;
};

// Rows (chosen - other) for every non-chosen term of the generator.
std::vector<IntRow> marking_rows(const Polynomial& g, std::size_t chosen_index);

// True when w * (chosen - other) > 0 for every generator.
bool witness_separates(const WeightVector& w, const std::vector<Polynomial>& gens,
                       const std::vector<std::size_t>& chosen_index);

struct MarkingSearchStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t feasibility_checks = 0;
};

// Visits, in lexicographic order of chosen indices, every marking for which
// some strictly positive w separates each chosen term from the other terms
// of its generator. Throws kGuardrail once more than `cap` candidate
// (partial) markings have been examined.
void for_each_realizable_marking(const std::vector<Polynomial>& gens, std::uint64_t cap,
                                 const std::function<void(const Marking&)>& visit,
                                 MarkingSearchStats* stats = nullptr);

std::vector<Marking> realizable_markings(const std::vector<Polynomial>& gens,
                                         std::uint64_t cap = 1000000,
                                         MarkingSearchStats* stats = nullptr);

}  // namespace detgb

#endif  // DETGB_MARKING_HPP_
