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

#include <functional>
#include <random>

#include "catch_amalgamated.hpp"
#include "detgb/determinantal.hpp"
#include "detgb/drivers.hpp"
#include "detgb/groebner.hpp"
#include "detgb/hilbert.hpp"
#include "detgb/monomial_ideal.hpp"

namespace detgb {
namespace {

// Block-multigraded Hilbert function of S/M at every degree <= (D,...,D),
// multiplied by prod (1 - y_i)^{n_i} and truncated there.
std::map<MultiDegree, mpz_class> truncated_k(const MonomialIdeal& m, int bound) {
  const Grading& g = m.ring().grading();
  std::size_t n = g.num_vars();
  int blocks = g.num_blocks();
  std::map<MultiDegree, mpz_class> h;
  Monomial mono(n);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      MultiDegree d = g.degree(mono);
      for (int x : d) {
        if (x > bound) return;
      }
      if (!m.contains(mono)) h[d] += 1;
      return;
    }
    for (int e = 0; e <= bound; ++e) {
      mono.set(v, e);
      walk(v + 1);
    }
    mono.set(v, 0);
  };
  walk(0);
  LaurentPoly factor = LaurentPoly::constant(blocks, 1);
  for (int b = 0; b < blocks; ++b) {
    LaurentPoly one_minus = LaurentPoly::constant(blocks, 1) - LaurentPoly::variable(blocks, b);
    factor = factor * one_minus.pow(static_cast<unsigned>(g.block_members(b).size()));
  }
  std::map<MultiDegree, mpz_class> k;
  for (const auto& [c, hc] : h) {
    for (const auto& [e, fe] : factor.terms()) {
      MultiDegree a(blocks);
      bool inside = true;
      for (int i = 0; i < blocks; ++i) {
        a[i] = c[i] + e[i];
        inside = inside && a[i] <= bound;
      }
      if (inside) k[a] += hc * fe;
    }
  }
  for (auto it = k.begin(); it != k.end();) it = it->second == 0 ? k.erase(it) : std::next(it);
  return k;
}

MonomialIdeal random_ideal(const RingPtr& ring, std::mt19937_64& rng, int gens, int max_exp) {
  std::vector<Monomial> g;
  for (int i = 0; i < gens; ++i) {
    Monomial m(ring->num_vars());
    for (std::size_t v = 0; v < ring->num_vars(); ++v) m.set(v, static_cast<std::int32_t>(rng() % (max_exp + 1)));
    if (!m.is_one()) g.push_back(m);
  }
  return MonomialIdeal(ring, g);
}

TEST_CASE("Laurent polynomial arithmetic", "[hilbert]") {
  LaurentPoly y1 = LaurentPoly::variable(2, 0), y2 = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, 1);
  CHECK(((one - y1) * (one + y1)) == (one - y1 * y1));
  CHECK((y1 - y1).is_zero());
  CHECK((one - y1).pow(2).coefficient({1, 0}) == -2);
  CHECK((y1 * y2).substitute_one_minus() == (one - y1) * (one - y2));
  CHECK(y1.embed(3).num_vars() == 3);
  CHECK(LaurentPoly::monomial({-1, 2}, 3).coefficient({-1, 2}) == 3);
  CHECK(h_complete(2, 2) == y1 * y1 + y1 * y2 + y2 * y2);
  CHECK(h_complete(0, 3) == LaurentPoly::constant(3, 1));
}

TEST_CASE("K-polynomial matches brute-force Hilbert function counts", "[hilbert][property]") {
  std::mt19937_64 rng(67);
  for (std::vector<int> shape : {std::vector<int>{3}, {2, 2}, {1, 2}}) {
    auto ring = block_ring(shape, Field::default_field());
    for (int trial = 0; trial < 12; ++trial) {
      MonomialIdeal m = random_ideal(ring, rng, 1 + static_cast<int>(rng() % 3), 2);
      LaurentPoly k = k_polynomial(m);
      int bound = 0;
      for (const auto& [e, c] : k.terms()) {
        for (int x : e) bound = std::max(bound, x);
      }
      std::map<MultiDegree, mpz_class> expected = truncated_k(m, bound);
      CHECK(expected == k.terms());
    }
  }
}

TEST_CASE("K-polynomial is additive and pivot independent", "[hilbert][property]") {
  auto ring = block_ring({2, 2}, Field::default_field());
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal a = random_ideal(ring, rng, 2, 2), b = random_ideal(ring, rng, 2, 2);
    LaurentPoly ka = k_polynomial(a), kb = k_polynomial(b);
    CHECK(k_polynomial(ideal_intersection(a, b)) == ka + kb - k_polynomial(ideal_sum(a, b)));
    CHECK(k_polynomial(a, PivotStrategy::kFirstShared) == ka);
  }
  CHECK(k_polynomial(MonomialIdeal::zero(ring)) == LaurentPoly::constant(2, 1));
  CHECK(k_polynomial(MonomialIdeal::unit(ring)).is_zero());
}

TEST_CASE("G-multidegree of a variable prime is y^b", "[hilbert]") {
  auto ring = block_ring({2, 3}, Field::default_field());
  for (const auto& b : all_variable_primes(*ring)) {
    MonomialIdeal p = variable_prime_ideal(ring, b);
    CHECK(g_multidegree(k_polynomial(p)) == LaurentPoly::monomial(b.b));
  }
}

TEST_CASE("closed formula equals the predicted row gin", "[hilbert][property]") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = m; n <= 5; ++n) {
      if (m * n > 12) continue;
      CHECK(k_mn_closed(m, n) == k_polynomial(predicted_gin_row(m, n, Field::default_field())));
    }
  }
  CHECK(k_mn_closed(3, 2) == LaurentPoly::constant(3, 1));
}

TEST_CASE("K-polynomial of an ideal does not depend on the order", "[hilbert][property]") {
  LinearMatrix l = generic_row_graded(2, 3, Field::default_field(), 1);
  auto gens = nonzero_minor_values(maximal_minors(l));
  LaurentPoly k = k_polynomial_ideal(gens, TermOrder::degrevlex(6));
  CHECK(k == k_polynomial_ideal(gens, TermOrder::lex(6)));
  CHECK(k == k_mn_closed(2, 3));
  CHECK(k == k_polynomial(initial_ideal(gens, TermOrder::lex(6))));
}

TEST_CASE("symbolic identities", "[hilbert]") {
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t <= 5; ++t) CHECK(verify_rg8(m, t));
  }
  for (int m = 1; m <= 3; ++m) {
    for (int n = m; n <= 6; ++n) {
      CHECK(verify_rg7(m, n - m));
      CHECK(verify_rg5_rg6(m, n));
      CHECK(verify_recursion(m, n));
      CHECK(verify_rg4(m, n));
    }
  }
}

}  // namespace
}  // namespace detgb
