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
#include <set>

#include "catch_amalgamated.hpp"
#include "detgb/determinantal.hpp"
#include "detgb/error.hpp"
#include "detgb/fourier_motzkin.hpp"
#include "detgb/marking.hpp"
#include "detgb/parser.hpp"
#include "detgb/term_order.hpp"

namespace detgb {
namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::int32_t>(rng() % (max_exp + 1)));
  return m;
}

std::vector<TermOrder> sample_orders(std::size_t n) {
  std::vector<TermOrder> out{TermOrder::lex(n), TermOrder::degrevlex(n)};
  WeightVector w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(mpz_class(static_cast<long>(1 + (3 * i) % 5)));
  out.push_back(order_from_weight(w));
  std::vector<std::size_t> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
  out.push_back(TermOrder::lex(n).with_priority(rev));
  out.push_back(TermOrder::degrevlex(n).with_priority(rev));
  return out;
}

TEST_CASE("term orders are multiplicative total orders with 1 minimal", "[term-order][property]") {
  const std::size_t n = 4;
  std::mt19937_64 rng(17);
  for (const auto& order : sample_orders(n)) {
    for (int i = 0; i < 300; ++i) {
      Monomial u = random_monomial(rng, n, 3), v = random_monomial(rng, n, 3), w = random_monomial(rng, n, 2);
      auto c = order.compare(u, v);
      CHECK((c == 0) == (u == v));
      CHECK(order.compare(v, u) == (0 <=> c));
      CHECK(order.compare(u * w, v * w) == c);
      if (!u.is_one()) CHECK(order.greater(u, Monomial(n)));
    }
  }
}

TEST_CASE("lex and degrevlex on textbook pairs", "[term-order]") {
  const std::size_t n = 3;
  TermOrder lex = TermOrder::lex(n), drl = TermOrder::degrevlex(n);
  Monomial xz2({1, 0, 2}), y3({0, 3, 0}), xy({1, 1, 0}), y2({0, 2, 0}), xz({1, 0, 1});
  CHECK(lex.greater(xz2, y3));
  CHECK(drl.greater(y3, Monomial({1, 0, 1})));
  CHECK(drl.greater(y2, xz));
  CHECK(lex.greater(xz, y2));
  CHECK(drl.greater(xy, xz));
}

TEST_CASE("term order syntax", "[term-order]") {
  auto ring = Ring::make({"a", "b", "c"}, Field::default_field());
  CHECK(TermOrder::parse("lex", *ring) == TermOrder::lex(3));
  CHECK(TermOrder::parse("degrevlex", *ring) == TermOrder::degrevlex(3));
  TermOrder w = TermOrder::parse("weight:1,2,3", *ring);
  CHECK(w.kind() == TermOrder::Kind::kWeighted);
  CHECK(w.greater(Monomial({0, 0, 1}), Monomial({1, 1, 0})) == false);
  CHECK(w.greater(Monomial({0, 1, 1}), Monomial({1, 1, 0})));
  TermOrder p = TermOrder::parse("lex vars:c>a>b", *ring);
  CHECK(p.priority() == std::vector<std::size_t>{2, 0, 1});
  CHECK(p.greater(Monomial({0, 0, 1}), Monomial({5, 0, 0})));
  CHECK(TermOrder::parse(p.to_string(*ring), *ring) == p);
  CHECK_THROWS_AS(TermOrder::parse("grevlex", *ring), Error);
  CHECK_THROWS_AS(TermOrder::parse("lex vars:a>b", *ring), Error);
  CHECK_THROWS_AS(TermOrder::parse("weight:1,2", *ring), Error);
  CHECK_THROWS_AS(TermOrder::weighted({{mpz_class(-1), mpz_class(1), mpz_class(1)}}), Error);
}

TEST_CASE("leading term of a polynomial", "[term-order]") {
  auto ring = Ring::make({"x", "y", "z"}, Field::default_field());
  Polynomial f = parse_poly("y^3 + x*z^2 - 5*x*y", ring);
  CHECK(leading_term(TermOrder::lex(3), f).monomial == Monomial({1, 1, 0}));
  CHECK(leading_term(TermOrder::degrevlex(3), f).monomial == Monomial({0, 3, 0}));
  CHECK_THROWS_AS(leading_term(TermOrder::lex(3), Polynomial::zero(ring)), Error);
}

bool satisfies(const std::vector<IntRow>& rows, const WeightVector& w) {
  for (const auto& r : rows) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * w[i];
    if (s <= 0) return false;
  }
  return true;
}

// Gordan: a*w > 0 is infeasible iff some nonzero y >= 0 has y^T A = 0.
bool gordan_certificate(const std::vector<IntRow>& rows, std::size_t n, int bound) {
  std::vector<int> y(rows.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < y.size() && y[k] == bound) y[k++] = 0;
    if (k == y.size()) return false;
    ++y[k];
    bool zero = true;
    for (std::size_t j = 0; j < n && zero; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) s += y[i] * rows[i][j];
      zero = s == 0;
    }
    if (zero) return true;
  }
}

TEST_CASE("Fourier-Motzkin agrees with the Gordan alternative", "[fourier-motzkin][property]") {
  std::mt19937_64 rng(23);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 2 + rng() % 2, k = 2 + rng() % 3;
    std::vector<IntRow> rows;
    for (std::size_t i = 0; i < k; ++i) {
      IntRow r(n);
      for (auto& e : r) e = static_cast<std::int64_t>(rng() % 5) - 2;
      rows.push_back(r);
    }
    auto w = solve_strict(rows, n);
    bool certificate = gordan_certificate(rows, n, 6);
    if (w) {
      ++feasible;
      CHECK(satisfies(rows, *w));
      CHECK_FALSE(certificate);
    } else {
      ++infeasible;
      CHECK(certificate);
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("strict system on a hyperplane", "[fourier-motzkin]") {
  std::vector<IntRow> rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto w = solve_strict_on_hyperplane(rows, {1, -1, 0}, 3);
  REQUIRE(w);
  CHECK((*w)[0] == (*w)[1]);
  CHECK(satisfies(rows, *w));
  CHECK_FALSE(solve_strict_on_hyperplane(rows, {1, 1, 1}, 3));
  CHECK_FALSE(solve_strict({{1, 0}, {-1, 0}}, 2));
  CHECK(primitive_row({4, -6, 0}) == IntRow{2, -3, 0});
  CHECK(primitive_row({0, 0}) == IntRow{0, 0});
  CHECK(positivity_rows(2) == std::vector<IntRow>{{1, 0}, {0, 1}});
}

TEST_CASE("cyclic binomials admit six of eight markings", "[marking]") {
  auto ring = Ring::make({"x", "y", "z"}, Field::default_field());
  std::vector<Polynomial> gens{parse_poly("x - y", ring), parse_poly("y - z", ring), parse_poly("z - x", ring)};
  auto markings = realizable_markings(gens);
  CHECK(markings.size() == 6);
  for (const auto& mk : markings) {
    REQUIRE(mk.witness);
    CHECK(witness_separates(*mk.witness, gens, mk.chosen_index));
    std::set<Monomial> chosen(mk.chosen.begin(), mk.chosen.end());
    CHECK(chosen.size() < 3);
  }
}

TEST_CASE("realizable markings match random weight sampling on 2x3 minors", "[marking][property]") {
  LinearMatrix x = variable_matrix(2, 3, Field::default_field());
  auto gens = nonzero_minor_values(maximal_minors(x));
  auto markings = realizable_markings(gens);
  std::set<std::vector<std::size_t>> found;
  for (const auto& mk : markings) found.insert(mk.chosen_index);
  CHECK(found.size() == markings.size());
  std::mt19937_64 rng(29);
  std::set<std::vector<std::size_t>> sampled;
  for (int s = 0; s < 3000; ++s) {
    WeightVector w;
    for (int i = 0; i < 6; ++i) w.push_back(mpz_class(static_cast<long>(1 + rng() % 1000)));
    TermOrder order = order_from_weight(w);
    std::vector<std::size_t> idx;
    for (const auto& g : gens) {
      Monomial lead = leading_term(order, g).monomial;
      for (std::size_t t = 0; t < g.size(); ++t) {
        if (g.terms()[t].monomial == lead) idx.push_back(t);
      }
    }
    sampled.insert(idx);
  }
  CHECK(sampled == found);
}

TEST_CASE("marking rows and search statistics", "[marking]") {
  auto ring = Ring::make({"x", "y"}, Field::default_field());
  Polynomial f = parse_poly("x^2 + x*y + y^2", ring);
  auto rows = marking_rows(f, 0);
  CHECK(rows == std::vector<IntRow>{{1, -1}, {1, -1}});
  MarkingSearchStats stats;
  auto markings = realizable_markings({f}, 1000000, &stats);
  CHECK(markings.size() == 2);
  CHECK(stats.candidates_examined >= 3);
  CHECK_THROWS_AS(realizable_markings({f, f, f}, 2), Error);
}

}  // namespace
}  // namespace detgb
