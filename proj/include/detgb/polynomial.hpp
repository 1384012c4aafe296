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

#ifndef DETGB_POLYNOMIAL_HPP_
#define DETGB_POLYNOMIAL_HPP_

#include <string>
#include <vector>

#include "detgb/field.hpp"
#include "detgb/ring.hpp"

namespace detgb {

struct Term {
  Monomial monomial;
  Scalar coeff;
};

// Sparse polynomial with coefficients in the ring's field. Terms are stored
// with nonzero coefficients, sorted degrevlex-descending, one per monomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t var);
  static Polynomial term(RingPtr ring, Monomial m, const Scalar& c);
  // Combines duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Terms must already be canonical: nonzero, distinct, degrevlex-descending.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Highest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  // Divides by the coefficient of the given monomial.
  Polynomial normalized_by(const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, unsigned exponent);

enum class ArithOp { kAdd, kSub, kMul };

// Throws ErrorKind::kRingMismatch when the operands do not share a ring.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

// The common multidegree of all terms. Throws kZeroPolynomial or
// kNotHomogeneous.
MultiDegree multidegree(const Polynomial& p);
bool is_multihomogeneous(const Polynomial& p);

}  // namespace detgb

#endif  // DETGB_POLYNOMIAL_HPP_
