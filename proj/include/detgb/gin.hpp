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

#ifndef DETGB_GIN_HPP_
#define DETGB_GIN_HPP_

#include <cstdint>
#include <vector>

#include "detgb/monomial_ideal.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// One invertible matrix per grading block; block[i][k][j] is the coefficient
// of the k-th block variable in the image of the j-th one.
struct GroupElement {
  std::vector<std::vector<std::vector<Scalar>>> blocks;
};

GroupElement identity_element(const Ring& ring);
// Dense random blocks keyed by (seed, trial, block, row, column); redrawn
// until invertible.
GroupElement random_dense_element(const Ring& ring, std::uint64_t seed, std::uint64_t trial);
// Upper triangular blocks with nonzero diagonal.
GroupElement random_borel_element(const Ring& ring, std::uint64_t seed, std::uint64_t trial);
// x_target -> x_target + c x_source, fixing every other variable. Both
// variables must share a block.
GroupElement elementary_move(const Ring& ring, std::size_t target, std::size_t source, const Scalar& c);

// x_ij -> sum_k g_kj x_ik, extended multiplicatively. Throws
// kInvalidArgument on a shape mismatch or a singular block.
std::vector<Polynomial> apply_group_element(const GroupElement& g, const std::vector<Polynomial>& polys);

// Whether the first variable of each block is the largest, the second the
// next largest, and so on.
bool is_gin_admissible(const TermOrder& order, const Ring& ring);

struct GinResult {
  MonomialIdeal candidate;
  std::vector<MonomialIdeal> per_trial;
  int trials = 0;
  bool agreed = false;
  bool borel_certified = false;
  std::uint64_t seed = 0;
};

// Initial ideals of `trials` random dense coordinate changes. Throws
// kPrecondition when the order is not admissible.
GinResult multigraded_gin(const std::vector<Polynomial>& gens, const TermOrder& order,
                          std::uint64_t seed, int trials);

}  // namespace detgb

#endif  // DETGB_GIN_HPP_
