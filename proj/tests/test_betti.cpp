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

#include <bit>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "detgb/betti.hpp"
#include "detgb/drivers.hpp"
#include "detgb/error.hpp"
#include "detgb/hilbert.hpp"
#include "detgb/monomial_ideal.hpp"

namespace detgb {
namespace {

constexpr std::int64_t kP = 32003;

std::int64_t power_mod(std::int64_t a, std::int64_t e) {
  std::int64_t r = 1;
  for (a %= kP; e > 0; e >>= 1, a = a * a % kP) {
    if (e & 1) r = r * a % kP;
  }
  return r;
}

std::size_t rank_mod(std::vector<std::vector<std::int64_t>> a) {
  std::size_t rank = 0, cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    std::int64_t inv = power_mod(a[rank][c], kP - 2);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::int64_t f = a[r][c] * inv % kP;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % kP + kP) % kP;
    }
    ++rank;
  }
  return rank;
}

// beta_{i,b}(S/M) as H_i of the Koszul complex of S/M in degree b: basis
// e_F for squarefree F dividing x^b with x^(b-F) outside M.
std::vector<std::uint64_t> koszul_betti(const MonomialIdeal& m, const Monomial& b) {
  std::vector<std::size_t> supp = b.support();
  std::size_t s = supp.size();
  auto basis_ok = [&](std::uint32_t f) {
    Monomial q = b;
    for (std::size_t k = 0; k < s; ++k) {
      if (f >> k & 1) q.set(supp[k], q[supp[k]] - 1);
    }
    return !m.contains(q);
  };
  std::vector<std::vector<std::uint32_t>> basis(s + 2);
  for (std::uint32_t f = 0; f < (1u << s); ++f) {
    if (basis_ok(f)) basis[std::popcount(f)].push_back(f);
  }
  auto boundary_rank = [&](std::size_t i) -> std::size_t {
    if (i == 0 || i > s || basis[i].empty() || basis[i - 1].empty()) return 0;
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t r = 0; r < basis[i - 1].size(); ++r) index[basis[i - 1][r]] = r;
    std::vector<std::vector<std::int64_t>> mat(basis[i].size(), std::vector<std::int64_t>(basis[i - 1].size(), 0));
    for (std::size_t r = 0; r < basis[i].size(); ++r) {
      std::uint32_t f = basis[i][r];
      int sign = 1;
      for (std::size_t k = 0; k < s; ++k) {
        if (!(f >> k & 1)) continue;
        auto it = index.find(f & ~(1u << k));
        if (it != index.end()) mat[r][it->second] = sign > 0 ? 1 : kP - 1;
        sign = -sign;
      }
    }
    return rank_mod(mat);
  };
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i <= s; ++i) {
    out.push_back(basis[i].size() - boundary_rank(i) - boundary_rank(i + 1));
  }
  return out;
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

std::set<Monomial> lcm_lattice(const MonomialIdeal& m) {
  std::set<Monomial> out{m.ring().one()};
  for (const auto& g : m.generators()) {
    std::set<Monomial> next = out;
    for (const auto& x : out) next.insert(x.lcm(g));
    out = std::move(next);
  }
  return out;
}

TEST_CASE("Betti numbers match Koszul homology on the lcm lattice", "[betti][property]") {
  auto ring = block_ring({2, 2}, Field::default_field());
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal m = random_ideal(ring, rng, 2 + static_cast<int>(rng() % 3), 2);
    if (m.is_zero() || m.is_unit()) continue;
    BettiTable t = betti_table(m);
    std::map<std::pair<int, std::vector<int>>, std::uint64_t> expected;
    for (const auto& b : lcm_lattice(m)) {
      auto betti = koszul_betti(m, b);
      for (std::size_t i = 0; i < betti.size(); ++i) {
        if (betti[i] != 0) expected[{static_cast<int>(i), b.exponents()}] = betti[i];
      }
    }
    std::map<std::pair<int, std::vector<int>>, std::uint64_t> got;
    for (const auto& [k, v] : t.fine) {
      if (v != 0) got[k] = v;
    }
    CHECK(got == expected);
  }
}

TEST_CASE("alternating Betti sum is the K-polynomial", "[betti][property]") {
  auto ring = block_ring({3, 2}, Field::default_field());
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal m = random_ideal(ring, rng, 3, 2);
    LaurentPoly k(2);
    for (const auto& [key, count] : betti_table(m).by_block(ring->grading())) {
      mpz_class c = static_cast<unsigned long>(count);
      k.add_term(key.second, key.first % 2 ? mpz_class(-c) : c);
    }
    CHECK(k == k_polynomial(m));
  }
}

TEST_CASE("Eagon-Northcott ranks", "[betti]") {
  CHECK(eagon_northcott_ranks(2, 3) == std::vector<std::uint64_t>{1, 3, 2});
  CHECK(eagon_northcott_ranks(2, 4) == std::vector<std::uint64_t>{1, 6, 8, 3});
  CHECK(eagon_northcott_ranks(3, 4) == std::vector<std::uint64_t>{1, 4, 3});
  CHECK_THROWS_AS(eagon_northcott_ranks(3, 2), Error);
}

TEST_CASE("polarization preserves graded Betti numbers", "[betti][property]") {
  auto ring = block_ring({2, 2}, Field::default_field());
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal m = random_ideal(ring, rng, 3, 3);
    BettiTable a = betti_table(m), b = betti_table(polarize(m).ideal);
    CHECK(a.coarse() == b.coarse());
    CHECK(a.by_block(ring->grading()) == b.by_block(polarize(m).ideal.ring().grading()));
  }
}

TEST_CASE("linearity, projective dimension and support bounds", "[betti]") {
  auto ring = block_ring({2}, Field::default_field());
  MonomialIdeal square(ring, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})});
  MonomialIdeal ci(ring, {Monomial({2, 0}), Monomial({0, 3})});
  CHECK(has_linear_resolution(square));
  CHECK_FALSE(has_linear_resolution(ci));
  CHECK(projective_dimension(square) == 1);
  CHECK(projective_dimension(MonomialIdeal::prime(ring, {0})) == 0);
  CHECK_THROWS_AS(projective_dimension(MonomialIdeal::zero(ring)), Error);
  BettiTable t = betti_table(ci);
  CHECK(t.totals() == std::vector<std::uint64_t>{1, 2, 1});
  CHECK_FALSE(betti_support_squarefree(t));
  CHECK_FALSE(betti_support_taylor_bounded(t, ring->grading()));
  MonomialIdeal gin = predicted_gin_row(2, 3, Field::default_field());
  BettiTable g = betti_table(gin);
  CHECK(betti_support_squarefree(g));
  CHECK(betti_support_taylor_bounded(g, gin.ring().grading()));
  CHECK_FALSE(betti_support_bounded(g, gin.ring().grading()));
}

TEST_CASE("generator guardrail", "[betti]") {
  auto ring = block_ring({6}, Field::default_field());
  std::vector<Monomial> gens;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a; b < 6; ++b) gens.push_back(ring->variable(a) * ring->variable(b));
  }
  MonomialIdeal m(ring, gens);
  try {
    betti_table(m, 20);
    FAIL("expected guardrail");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGuardrail);
  }
}

}  // namespace
}  // namespace detgb
