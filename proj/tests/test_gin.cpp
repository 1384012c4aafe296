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

#include <random>

#include "catch_amalgamated.hpp"
#include "detgb/determinantal.hpp"
#include "detgb/drivers.hpp"
#include "detgb/error.hpp"
#include "detgb/gin.hpp"
#include "detgb/groebner.hpp"
#include "detgb/matroid.hpp"
#include "detgb/parser.hpp"

namespace detgb {
namespace {

std::vector<Polynomial> as_polys(const MonomialIdeal& m) {
  std::vector<Polynomial> out;
  for (const auto& g : m.generators()) out.push_back(Polynomial::term(m.ring_ptr(), g, m.ring().field().one()));
  return out;
}

TEST_CASE("group elements act on polynomials", "[gin]") {
  auto ring = block_ring({2, 1}, Field::default_field());
  Polynomial f = parse_poly("x_1_2*x_2_1 + x_1_1^2", ring);
  CHECK(apply_group_element(identity_element(*ring), {f}).front() == f);
  GroupElement move = elementary_move(*ring, 1, 0, ring->field().from_int(3));
  CHECK(apply_group_element(move, {f}).front() == parse_poly("x_1_2*x_2_1 + 3*x_1_1*x_2_1 + x_1_1^2", ring));
  CHECK_THROWS_AS(elementary_move(*ring, 2, 0, ring->field().one()), Error);
  GroupElement singular = identity_element(*ring);
  singular.blocks[0][0][0] = ring->field().zero();
  singular.blocks[0][1][0] = ring->field().zero();
  CHECK_THROWS_AS(apply_group_element(singular, {f}), Error);
}

TEST_CASE("random elements are keyed by seed and trial", "[gin]") {
  auto ring = block_ring({3, 2}, Field::default_field());
  GroupElement a = random_dense_element(*ring, 5, 0), b = random_dense_element(*ring, 5, 0);
  GroupElement c = random_dense_element(*ring, 5, 1);
  CHECK(a.blocks == b.blocks);
  CHECK_FALSE(a.blocks == c.blocks);
  GroupElement u = random_borel_element(*ring, 5, 0);
  for (const auto& block : u.blocks) {
    for (std::size_t k = 0; k < block.size(); ++k) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        if (k > j) CHECK(ring->field().is_zero(block[k][j]));
        if (k == j) CHECK_FALSE(ring->field().is_zero(block[k][j]));
      }
    }
  }
}

TEST_CASE("upper triangular changes fix the initial ideal of a Borel-fixed ideal", "[gin][property]") {
  auto ring = block_ring({3, 2}, Field::default_field());
  std::mt19937_64 rng(89);
  TermOrder order = TermOrder::degrevlex(ring->num_vars());
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Monomial> seeds;
    for (int g = 0; g < 2; ++g) {
      Monomial m(ring->num_vars());
      for (int d = 0; d < 2; ++d) m = m * ring->variable(rng() % ring->num_vars());
      seeds.push_back(m);
    }
    MonomialIdeal borel = borel_closure(ring, seeds);
    GroupElement u = random_borel_element(*ring, 7, static_cast<std::uint64_t>(trial));
    CHECK(initial_ideal(apply_group_element(u, as_polys(borel)), order) == borel);
  }
}

TEST_CASE("admissible orders", "[gin]") {
  auto ring = block_ring({2, 2}, Field::default_field());
  CHECK(is_gin_admissible(TermOrder::lex(4), *ring));
  CHECK(is_gin_admissible(TermOrder::degrevlex(4), *ring));
  CHECK_FALSE(is_gin_admissible(TermOrder::lex(4).with_priority({1, 0, 2, 3}), *ring));
  CHECK(is_gin_admissible(TermOrder::lex(4).with_priority({2, 3, 0, 1}), *ring));
  std::vector<Polynomial> gens{Polynomial::variable(ring, 1)};
  try {
    multigraded_gin(gens, TermOrder::lex(4).with_priority({1, 0, 2, 3}), 1, 1);
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
}

TEST_CASE("gin of a single non-initial variable", "[gin]") {
  auto ring = block_ring({2}, Field::default_field());
  GinResult r = multigraded_gin({Polynomial::variable(ring, 1)}, TermOrder::degrevlex(2), 1, 3);
  CHECK(r.agreed);
  CHECK(r.candidate == MonomialIdeal::prime(ring, {0}));
  CHECK(r.trials == 3);
  CHECK(r.per_trial.size() == 3);
}

TEST_CASE("gins are Borel fixed and reproducible", "[gin][property]") {
  auto ring = block_ring({3, 2}, Field::default_field());
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      Monomial m(ring->num_vars());
      for (int d = 0; d < 2; ++d) m = m * ring->variable(rng() % ring->num_vars());
      gens.push_back(Polynomial::term(ring, m, ring->field().one()));
    }
    GinResult a = multigraded_gin(gens, TermOrder::degrevlex(5), 11, 2);
    GinResult b = multigraded_gin(gens, TermOrder::degrevlex(5), 11, 2);
    CHECK(a.agreed);
    CHECK(is_borel_fixed(a.candidate));
    CHECK(a.candidate == b.candidate);
  }
}

TEST_CASE("column-graded gin is the predicted matroid ideal", "[gin]") {
  for (std::uint64_t seed : {1, 2, 3}) {
    LinearMatrix l = generic_column_graded(2, 3, Field::default_field(), seed);
    auto gens = nonzero_minor_values(maximal_minors(l));
    GinResult r = multigraded_gin(gens, TermOrder::degrevlex(6), seed, 3);
    CHECK(r.agreed);
    CHECK(r.candidate == predicted_gin_column(l));
  }
  LinearMatrix row = generic_row_graded(2, 3, Field::default_field(), 1);
  GinResult r = multigraded_gin(nonzero_minor_values(maximal_minors(row)), TermOrder::lex(6), 1, 3);
  CHECK(r.candidate == predicted_gin_row(2, 3, Field::default_field()));
}

}  // namespace
}  // namespace detgb
