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

#include <algorithm>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "detgb/determinantal.hpp"
#include "detgb/error.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/parser.hpp"

namespace detgb {
namespace {

// Leibniz expansion over all permutations.
Scalar leibniz(const Field& k, const std::vector<std::vector<Scalar>>& a) {
  std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = k.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Scalar term = k.one();
    for (std::size_t i = 0; i < n; ++i) term = k.mul(term, a[i][perm[i]]);
    total = inversions % 2 ? k.sub(total, term) : k.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST_CASE("determinant agrees with the Leibniz formula", "[determinantal][property]") {
  std::mt19937_64 rng(41);
  for (Field k : {Field::default_field(), Field::rationals()}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 1 + rng() % 4;
      std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
      for (auto& row : a) {
        for (auto& e : row) e = k.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
      }
      CHECK(determinant(k, a) == leibniz(k, a));
    }
  }
}

TEST_CASE("maximal minors of the 2x3 variable matrix", "[determinantal]") {
  LinearMatrix x = variable_matrix(2, 3, Field::default_field());
  auto minors = maximal_minors(x);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0].columns == std::vector<int>{1, 2});
  CHECK(minors[2].columns == std::vector<int>{2, 3});
  CHECK(minors[0].value == parse_poly("x11*x22 - x12*x21", x.ring_ptr()));
  CHECK(minors[1].value == parse_poly("x11*x23 - x13*x21", x.ring_ptr()));
  LinearMatrix swapped = x.with_rows_swapped(0, 1);
  auto neg = maximal_minors(swapped);
  for (std::size_t i = 0; i < 3; ++i) CHECK(neg[i].value == -minors[i].value);
  CHECK_THROWS_AS(maximal_minors(variable_matrix(3, 2, Field::default_field())), Error);
}

TEST_CASE("column subsets are lexicographic and complete", "[determinantal]") {
  auto subsets = column_subsets(5, 3);
  CHECK(subsets.size() == binomial(5, 3));
  CHECK(std::is_sorted(subsets.begin(), subsets.end()));
  CHECK(subsets.front() == std::vector<int>{1, 2, 3});
  CHECK(subsets.back() == std::vector<int>{3, 4, 5});
}

TEST_CASE("generic builders respect the grading and the seed", "[determinantal]") {
  Field k = Field::default_field();
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 5}}) {
    LinearMatrix c = generic_column_graded(m, n, k, 7), r = generic_row_graded(m, n, k, 7);
    CHECK(c.mode() == MatrixMode::kColumnGraded);
    CHECK(r.mode() == MatrixMode::kRowGraded);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(c.entry(i, j).size() == static_cast<std::size_t>(m));
        CHECK(multidegree(c.entry(i, j)) == c.ring().grading().degree(c.ring().variable(j)));
        CHECK(r.entry(i, j).size() == static_cast<std::size_t>(n));
        for (const auto& t : r.entry(i, j).terms()) CHECK(r.ring().cell(t.monomial.support().front())->first == i + 1);
      }
    }
    CHECK(generic_column_graded(m, n, k, 7).entries() == c.entries());
    CHECK_FALSE(generic_column_graded(m, n, k, 8).entries() == c.entries());
  }
}

TEST_CASE("linear matrix validation", "[determinantal]") {
  auto ring = matrix_ring(2, 2, MatrixGrading::kColumn, Field::default_field());
  CHECK_THROWS_AS(parse_matrix(ring, MatrixMode::kColumnGraded, {{"x11", "x12"}, {"x21*x11", "x22"}}), Error);
  CHECK_THROWS_AS(parse_matrix(ring, MatrixMode::kColumnGraded, {{"x12", "x12"}, {"x21", "x22"}}), Error);
  CHECK_THROWS_AS(parse_matrix(ring, MatrixMode::kColumnGraded, {{"x11", "x12"}, {"x21"}}), Error);
  LinearMatrix z = parse_matrix(ring, MatrixMode::kColumnGraded, {{"x11", "0"}, {"x21", "0"}});
  CHECK(z.has_zero_column());
  CHECK(nonzero_minor_values(maximal_minors(z)).empty());
}

TEST_CASE("specialization maps minors to multiples of squarefree monomials", "[determinantal][property]") {
  Field k = Field::default_field();
  for (auto [m, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    LinearMatrix x = variable_matrix(m, n, k);
    auto minors = maximal_minors(x);
    for (std::uint64_t seed : {1, 2, 3}) {
      SpecializationMatrix a = SpecializationMatrix::random(m, n, k, seed);
      std::vector<Polynomial> values;
      for (const auto& mi : minors) values.push_back(mi.value);
      auto images = specialize_phi(values, a);
      for (std::size_t i = 0; i < minors.size(); ++i) {
        Monomial y(static_cast<std::size_t>(n));
        for (int c : minors[i].columns) y.set(c - 1, 1);
        REQUIRE(images[i].size() == 1);
        CHECK(images[i].terms().front().monomial == y);
        CHECK(images[i].terms().front().coeff == a.minor(minors[i].columns));
        CHECK_FALSE(k.is_zero(a.minor(minors[i].columns)));
      }
    }
  }
}

TEST_CASE("specialization from explicit values", "[determinantal]") {
  Field k = Field::default_field();
  auto a = SpecializationMatrix::from_values(k, {{k.from_int(1), k.from_int(1), k.from_int(1)},
                                                 {k.from_int(1), k.from_int(2), k.from_int(3)}});
  CHECK(a.minor({1, 3}) == k.from_int(2));
  CHECK(phi_target_ring(3, k)->names() == std::vector<std::string>{"y_1", "y_2", "y_3"});
}

}  // namespace
}  // namespace detgb
