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

#ifndef DETGB_FOURIER_MOTZKIN_HPP_
#define DETGB_FOURIER_MOTZKIN_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "detgb/term_order.hpp"

namespace detgb {

using IntRow = std::vector<std::int64_t>;

// Decides whether a*w > 0 holds for every row a at some rational w, by
// Fourier-Motzkin elimination in variable order with the Chernikov rule.
// Returns a primitive integer solution, or nullopt when infeasible.
std::optional<WeightVector> solve_strict(const std::vector<IntRow>& rows, std::size_t num_vars);

// As solve_strict, restricted to the hyperplane eq*w = 0 (eq nonzero).
std::optional<WeightVector> solve_strict_on_hyperplane(const std::vector<IntRow>& rows,
                                                       const IntRow& eq, std::size_t num_vars);

// Unit rows e_1..e_n, i.e. the constraints w_i > 0.
std::vector<IntRow> positivity_rows(std::size_t num_vars);

// Divides by the gcd of the entries; the zero row is returned unchanged.
IntRow primitive_row(IntRow row);

}  // namespace detgb

#endif  // DETGB_FOURIER_MOTZKIN_HPP_
