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

#ifndef DETGB_BETTI_HPP_
#define DETGB_BETTI_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "detgb/monomial_ideal.hpp"

namespace detgb {

// Graded Betti numbers of S/M: beta_0 = 1 at degree 0 and beta_1 counts the
// minimal generators.
struct BettiTable {
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> fine;

  // (homological index, total degree) -> count.
  std::map<std::pair<int, int>, std::uint64_t> coarse() const;
  // (homological index, block multidegree) -> count.
  std::map<std::pair<int, MultiDegree>, std::uint64_t> by_block(const Grading& grading) const;
  // beta_i(S/M) for i = 0..pd(S/M).
  std::vector<std::uint64_t> totals() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// beta_{i,b}(S/M) = dim H~_{i-2}(K^b(M)) at every b of the lcm lattice, where
// K^b(M) is the upper Koszul complex {F squarefree : x^(b-F) in M}. Throws
// kGuardrail above max_generators minimal generators.
BettiTable betti_table(const MonomialIdeal& m, std::size_t max_generators = 20);

bool has_linear_resolution(const MonomialIdeal& m);
// Ideal convention: pd(M) = pd(S/M) - 1. Throws kInvalidArgument on 0.
int projective_dimension(const MonomialIdeal& m);

// beta_0 = 1, beta_{k+1} = C(n, m+k) C(m+k-1, k) for k = 0..n-m.
std::vector<std::uint64_t> eagon_northcott_ranks(int m, int n);

// True when every nonzero fine entry sits at a multidegree <= (1,...,1) of
// the fine Z^N grading, i.e. at a squarefree monomial.
bool betti_support_squarefree(const BettiTable& table);
// True when every nonzero fine entry has block multidegree <= (1,...,1).
bool betti_support_bounded(const BettiTable& table, const Grading& grading);
// True when every nonzero entry beta_{i,a} has a <= (i,...,i), the bound
// coming from the Taylor complex of generators of degree <= (1,...,1).
bool betti_support_taylor_bounded(const BettiTable& table, const Grading& grading);

}  // namespace detgb

#endif  // DETGB_BETTI_HPP_
