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

#include "detgb/gin.hpp"

#include "detgb/determinantal.hpp"
#include "detgb/error.hpp"
#include "detgb/groebner.hpp"
#include "detgb/random.hpp"

namespace detgb {

namespace {

GroupElement zero_element(const Ring& ring) {
  const Grading& gr = ring.grading();
  GroupElement g;
  for (int b = 0; b < gr.num_blocks(); ++b) {
    std::size_t size = gr.block_members(b).size();
    g.blocks.push_back(std::vector<std::vector<Scalar>>(size, std::vector<Scalar>(size, ring.field().zero())));
  }
  return g;
}

bool invertible(const Field& field, const std::vector<std::vector<Scalar>>& block) {
  return block.empty() || !field.is_zero(determinant(field, block));
}

}  // namespace

GroupElement identity_element(const Ring& ring) {
  GroupElement g = zero_element(ring);
  for (auto& block : g.blocks) {
    for (std::size_t k = 0; k < block.size(); ++k) block[k][k] = ring.field().one();
  }
  return g;
}

GroupElement random_dense_element(const Ring& ring, std::uint64_t seed, std::uint64_t trial) {
  KeyedRandom rng(seed);
  GroupElement g = zero_element(ring);
  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    auto& block = g.blocks[b];
    for (std::uint64_t attempt = 0;; ++attempt) {
      for (std::size_t r = 0; r < block.size(); ++r) {
        for (std::size_t c = 0; c < block.size(); ++c) {
          block[r][c] = rng.nonzero(ring.field(), {trial, b, r, c, attempt});
        }
      }
      if (invertible(ring.field(), block)) break;
    }
  }
  return g;
}

GroupElement random_borel_element(const Ring& ring, std::uint64_t seed, std::uint64_t trial) {
  KeyedRandom rng(seed ^ 0xb0e1ULL);
  GroupElement g = zero_element(ring);
  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    auto& block = g.blocks[b];
    for (std::size_t r = 0; r < block.size(); ++r) {
      for (std::size_t c = r; c < block.size(); ++c) {
        block[r][c] = rng.nonzero(ring.field(), {trial, b, r, c});
      }
    }
  }
  return g;
}

GroupElement elementary_move(const Ring& ring, std::size_t target, std::size_t source, const Scalar& c) {
  const Grading& gr = ring.grading();
  if (gr.block_of(target) != gr.block_of(source) || target == source) {
    throw Error(ErrorKind::kInvalidArgument, "elementary move needs two distinct variables of one block");
  }
  GroupElement g = identity_element(ring);
  auto& block = g.blocks[gr.block_of(target)];
  block[gr.position(source)][gr.position(target)] = c;
  return g;
}

std::vector<Polynomial> apply_group_element(const GroupElement& g, const std::vector<Polynomial>& polys) {
  if (polys.empty()) return {};
  const RingPtr& ring = polys.front().ring_ptr();
  const Grading& gr = ring->grading();
  const Field& field = ring->field();
  if (static_cast<int>(g.blocks.size()) != gr.num_blocks()) {
    throw Error(ErrorKind::kInvalidArgument, "group element does not match the grading blocks");
  }
  for (int b = 0; b < gr.num_blocks(); ++b) {
    const auto& block = g.blocks[b];
    if (block.size() != gr.block_members(b).size()) {
      throw Error(ErrorKind::kInvalidArgument, "group element block has the wrong size");
    }
    for (const auto& row : block) {
      if (row.size() != block.size()) throw Error(ErrorKind::kInvalidArgument, "group element block is not square");
    }
    if (!invertible(field, block)) throw Error(ErrorKind::kInvalidArgument, "singular group element block");
  }
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    int b = gr.block_of(v);
    int j = gr.position(v);
    const auto& members = gr.block_members(b);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < members.size(); ++k) {
      terms.push_back(Term{ring->variable(members[k]), g.blocks[b][k][j]});
    }
    images.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  std::vector<std::vector<Polynomial>> powers(ring->num_vars());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial::constant(ring, field.one()));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    require_same_ring(*ring, p.ring());
    Polynomial acc(ring);
    for (const auto& t : p.terms()) {
      Polynomial term = Polynomial::constant(ring, t.coeff);
      for (auto v : t.monomial.support()) term = term * power(v, t.monomial[v]);
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

bool is_gin_admissible(const TermOrder& order, const Ring& ring) {
  const Grading& gr = ring.grading();
  for (int b = 0; b < gr.num_blocks(); ++b) {
    const auto& members = gr.block_members(b);
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (!order.greater(ring.variable(members[k - 1]), ring.variable(members[k]))) return false;
    }
  }
  return true;
}

GinResult multigraded_gin(const std::vector<Polynomial>& gens, const TermOrder& order,
                          std::uint64_t seed, int trials) {
  if (gens.empty()) throw Error(ErrorKind::kInvalidArgument, "no generators");
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "at least one trial required");
  const RingPtr& ring = gens.front().ring_ptr();
  if (!is_gin_admissible(order, *ring)) {
    throw Error(ErrorKind::kPrecondition,
                "term order must rank the variables of each block in declaration order");
  }
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!is_multihomogeneous(g)) {
      throw Error(ErrorKind::kNotHomogeneous, "generator is not multihomogeneous: " + g.to_string());
    }
    nonzero.push_back(g);
  }
  GinResult result{MonomialIdeal::zero(ring), {}, trials, true, false, seed};
  for (int t = 0; t < trials; ++t) {
    MonomialIdeal in = MonomialIdeal::zero(ring);
    if (!nonzero.empty()) {
      auto moved = apply_group_element(random_dense_element(*ring, seed, static_cast<std::uint64_t>(t)), nonzero);
      in = initial_ideal(moved, order);
    }
    result.per_trial.push_back(in);
  }
  result.candidate = result.per_trial.front();
  for (const auto& in : result.per_trial) result.agreed = result.agreed && in == result.candidate;
  result.borel_certified = is_borel_fixed(result.candidate);
  return result;
}

}  // namespace detgb
