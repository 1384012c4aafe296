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
#include "detgb/error.hpp"
#include "detgb/parser.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/random.hpp"

namespace detgb {
namespace {

constexpr std::int64_t kP = 32003;

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms, int max_exp) {
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring->num_vars());
    for (std::size_t v = 0; v < ring->num_vars(); ++v) m.set(v, static_cast<std::int32_t>(rng() % (max_exp + 1)));
    out.push_back({m, ring->field().from_int(static_cast<std::int64_t>(rng() % 201) - 100)});
  }
  return Polynomial::from_terms(ring, out);
}

// Evaluation in F_p with plain integer arithmetic, independent of Field.
std::int64_t eval_mod(const Polynomial& p, const std::vector<std::int64_t>& point) {
  std::int64_t acc = 0;
  for (const auto& t : p.terms()) {
    std::int64_t v = t.coeff.residue();
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v = v * point[i] % kP;
    }
    acc = (acc + v) % kP;
  }
  return acc;
}

TEST_CASE("prime field arithmetic matches modular integers", "[field]") {
  Field f = Field::prime(kP);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::int64_t a = static_cast<std::int64_t>(rng() % kP), b = static_cast<std::int64_t>(rng() % kP);
    Scalar sa = f.from_int(a), sb = f.from_int(b);
    CHECK(f.add(sa, sb).residue() == (a + b) % kP);
    CHECK(f.mul(sa, sb).residue() == a * b % kP);
    CHECK(f.sub(sa, sb).residue() == ((a - b) % kP + kP) % kP);
    if (a != 0) CHECK(f.mul(sa, f.inv(sa)).residue() == 1);
  }
  CHECK(f.from_int(-1).residue() == kP - 1);
  CHECK(f.to_string(f.from_int(-3)) == "-3");
  CHECK(f.is_negative(f.from_int(-3)));
}

TEST_CASE("field specs parse and reject bad input", "[field]") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("fp:7") == Field::prime(7));
  CHECK(Field::parse("fp:32003").spec() == "fp:32003");
  CHECK_THROWS_AS(Field::parse("fp:9"), Error);
  CHECK_THROWS_AS(Field::parse("fp:2"), Error);
  CHECK_THROWS_AS(Field::parse("zz"), Error);
  CHECK(is_prime_number(32003));
  CHECK_FALSE(is_prime_number(32001));
}

TEST_CASE("rational field arithmetic is exact", "[field]") {
  Field q = Field::rationals();
  Scalar half = q.from_rational(mpq_class(1, 2)), third = q.from_rational(mpq_class(1, 3));
  CHECK(q.add(half, third).rational() == mpq_class(5, 6));
  CHECK(q.div(half, third).rational() == mpq_class(3, 2));
  CHECK(q.to_string(q.neg(half)) == "-1/2");
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
}

TEST_CASE("monomial operations", "[monomial]") {
  Monomial a({2, 0, 1}), b({1, 3, 0});
  CHECK(a.degree() == 3);
  CHECK((a * b) == Monomial({3, 3, 1}));
  CHECK(a.lcm(b) == Monomial({2, 3, 1}));
  CHECK(a.gcd(b) == Monomial({1, 0, 0}));
  CHECK(Monomial({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK((a / Monomial({1, 0, 1})) == Monomial({1, 0, 0}));
  CHECK(a.squarefree_part() == Monomial({1, 0, 1}));
  CHECK_FALSE(a.is_squarefree());
  CHECK(Monomial({0, 1, 0}).coprime(Monomial({1, 0, 1})));
  CHECK(degrevlex_compare(Monomial({1, 0, 1}), Monomial({0, 2, 0})) < 0);
  CHECK(degrevlex_compare(Monomial({2, 0, 0}), Monomial({1, 1, 0})) > 0);
}

TEST_CASE("matrix rings name and grade their variables", "[ring]") {
  auto r = matrix_ring(2, 3, MatrixGrading::kColumn, Field::default_field());
  REQUIRE(r->num_vars() == 6);
  CHECK(r->name(4) == "x_2_2");
  CHECK(r->find("x12") == std::optional<std::size_t>(1));
  CHECK(r->find("x_1_2") == std::optional<std::size_t>(1));
  CHECK_FALSE(r->find("y").has_value());
  CHECK(r->grading().block_of(4) == 1);
  CHECK(r->cell(4) == std::optional<std::pair<int, int>>({2, 2}));
  auto rows = matrix_ring(2, 3, MatrixGrading::kRow, Field::default_field());
  CHECK(rows->grading().block_of(4) == 1);
  CHECK(rows->grading().block_members(1) == std::vector<std::size_t>{3, 4, 5});
  CHECK(rows->grading().position(5) == 2);
  CHECK(r->grading().degree(Monomial({1, 0, 0, 1, 1, 0})) == MultiDegree{2, 1, 0});
}

TEST_CASE("polynomial ring axioms hold on random samples", "[polynomial][property]") {
  auto ring = Ring::make({"a", "b", "c"}, Field::prime(kP));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = random_poly(ring, rng, 5, 3), g = random_poly(ring, rng, 4, 2), h = random_poly(ring, rng, 3, 2);
    CHECK((f + g) == (g + f));
    CHECK((f * g) == (g * f));
    CHECK(((f * g) * h) == (f * (g * h)));
    CHECK((f * (g + h)) == (f * g + f * h));
    CHECK((f - f).is_zero());
    std::vector<std::int64_t> pt{static_cast<std::int64_t>(rng() % kP), static_cast<std::int64_t>(rng() % kP),
                                 static_cast<std::int64_t>(rng() % kP)};
    CHECK(eval_mod(f * g, pt) == eval_mod(f, pt) * eval_mod(g, pt) % kP);
    CHECK(eval_mod(pow(g, 3), pt) == eval_mod(g, pt) * eval_mod(g, pt) % kP * eval_mod(g, pt) % kP);
  }
}

TEST_CASE("terms are canonical: sorted degrevlex, no zeros", "[polynomial][property]") {
  auto ring = Ring::make({"a", "b", "c", "d"}, Field::prime(kP));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = random_poly(ring, rng, 8, 3) * random_poly(ring, rng, 3, 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK_FALSE(f.field().is_zero(f.terms()[i].coeff));
      if (i > 0) CHECK(degrevlex_compare(f.terms()[i - 1].monomial, f.terms()[i].monomial) > 0);
    }
  }
}

TEST_CASE("printing round-trips through the parser", "[parser][property]") {
  for (Field field : {Field::prime(kP), Field::rationals()}) {
    auto ring = Ring::make({"x", "y", "z"}, field);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = random_poly(ring, rng, 6, 3);
      if (!field.is_prime()) f = f.scaled(field.from_rational(mpq_class(2, 7)));
      CHECK(parse_poly(f.to_string(), ring) == f);
    }
  }
}

TEST_CASE("parser grammar", "[parser]") {
  auto ring = Ring::make({"x", "y", "z"}, Field::rationals());
  CHECK(parse_poly("(x-3/2*y)^2 - z*x + 7", ring).to_string() == "x^2 - 3*x*y + 9/4*y^2 - x*z + 7");
  CHECK(parse_poly("-x + x", ring).is_zero());
  CHECK(parse_poly("2*(x+y) - 2*y", ring) == parse_poly("2*x", ring));
  auto kind = [&](const char* text) {
    try {
      parse_poly(text, ring);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvalidArgument;
  };
  CHECK(kind("x + * y") == ErrorKind::kParse);
  CHECK(kind("x / y") == ErrorKind::kParse);
  CHECK(kind("x / 0") == ErrorKind::kParse);
  CHECK(kind("w") == ErrorKind::kParse);
  CHECK(kind("(x + y") == ErrorKind::kParse);
  CHECK(kind("") == ErrorKind::kParse);
  CHECK_THROWS_WITH(parse_poly("x + * y", ring), Catch::Matchers::ContainsSubstring("position 4"));
}

TEST_CASE("multidegree and homogeneity", "[polynomial]") {
  auto ring = matrix_ring(2, 2, MatrixGrading::kColumn, Field::default_field());
  Polynomial det = parse_poly("x11*x22 - x12*x21", ring);
  CHECK(det.is_homogeneous());
  CHECK(is_multihomogeneous(det));
  CHECK(multidegree(det) == MultiDegree{1, 1});
  Polynomial mixed = parse_poly("x11 + x12", ring);
  CHECK(mixed.is_homogeneous());
  CHECK_FALSE(is_multihomogeneous(mixed));
  CHECK_THROWS_AS(multidegree(mixed), Error);
  CHECK_THROWS_AS(multidegree(Polynomial::zero(ring)), Error);
  CHECK(Polynomial::zero(ring).total_degree() == -1);
}

TEST_CASE("arithmetic across rings is rejected", "[polynomial]") {
  auto r1 = Ring::make({"x", "y"}, Field::prime(kP));
  auto r2 = Ring::make({"x", "y"}, Field::rationals());
  Polynomial a = Polynomial::variable(r1, 0), b = Polynomial::variable(r2, 0);
  try {
    poly_arith(a, b, ArithOp::kAdd);
    FAIL("expected ring mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kRingMismatch);
  }
  auto r3 = Ring::make({"x", "y"}, Field::prime(kP));
  CHECK_NOTHROW(poly_arith(a, Polynomial::variable(r3, 1), ArithOp::kMul));
}

TEST_CASE("keyed random stream is reproducible and key-sensitive", "[random]") {
  KeyedRandom a(42), b(42), c(43);
  CHECK(a.at({1, 2, 3}) == b.at({1, 2, 3}));
  CHECK(a.at({1, 2, 3}) != a.at({1, 3, 2}));
  CHECK(a.at({1}) != c.at({1}));
  Field f = Field::prime(kP);
  for (std::uint64_t k = 0; k < 200; ++k) CHECK_FALSE(f.is_zero(a.nonzero(f, {k})));
  Field q = Field::rationals();
  for (std::uint64_t k = 0; k < 200; ++k) CHECK_FALSE(q.is_zero(a.nonzero(q, {k})));
}

}  // namespace
}  // namespace detgb
