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

#include "detgb/polynomial.hpp"

#include <algorithm>
#include <map>

#include "detgb/error.hpp"

namespace detgb {

namespace {

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_compare(a, b) > 0;
  }
};

using TermMap = std::map<Monomial, Scalar, DegRevLexGreater>;

void accumulate(TermMap& acc, const Field& field, const Monomial& m, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (field.is_zero(it->second)) acc.erase(it);
  } else if (field.is_zero(c)) {
    acc.erase(it);
  }
}

std::vector<Term> drain(TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{m, c});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back(Term{ring->one(), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  Polynomial p(ring);
  p.terms_.push_back(Term{ring->variable(var), ring->field().one()});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.monomial.size() != ring->num_vars()) {
      throw Error(ErrorKind::kInvalidArgument, "monomial size does not match ring");
    }
    accumulate(acc, ring->field(), t.monomial, t.coeff);
  }
  Polynomial p(std::move(ring));
  p.terms_ = drain(acc);
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return field().zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = field().neg(t.coeff);
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = field().mul(t.coeff, c);
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) {
    p.terms_.push_back(Term{t.monomial * m, field().mul(t.coeff, c)});
  }
  return p;
}

Polynomial Polynomial::normalized_by(const Monomial& m) const {
  Scalar c = coefficient(m);
  if (field().is_zero(c)) {
    throw Error(ErrorKind::kInvalidArgument, "normalizing monomial is not a term");
  }
  return scaled(field().inv(c));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = f.is_negative(t.coeff);
    Scalar magnitude = negative ? f.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = t.monomial.is_one() ? "" : ring_->to_string(t.monomial);
    if (f.is_one(magnitude)) {
      out += mono.empty() ? "1" : mono;
    } else {
      out += f.to_string(magnitude);
      if (!mono.empty()) out += "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial) return false;
    if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a.ring(), b.ring());
  const Field& f = a.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    std::strong_ordering c = std::strong_ordering::greater;
    if (ia == a.terms().end()) {
      c = std::strong_ordering::less;
    } else if (ib != b.terms().end()) {
      c = degrevlex_compare(ia->monomial, ib->monomial);
    }
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back(Term{ib->monomial, subtract ? f.neg(ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Scalar s = subtract ? f.sub(ia->coeff, ib->coeff) : f.add(ia->coeff, ib->coeff);
      if (!f.is_zero(s)) out.push_back(Term{ia->monomial, s});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_sorted(a.ring_ptr(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const Field& f = a.field();
  TermMap acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      accumulate(acc, f, s.monomial * t.monomial, f.mul(s.coeff, t.coeff));
    }
  }
  return Polynomial::from_sorted(a.ring_ptr(), drain(acc));
}

Polynomial pow(const Polynomial& a, unsigned exponent) {
  Polynomial result = Polynomial::constant(a.ring_ptr(), a.field().one());
  Polynomial base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown arithmetic operation");
}

MultiDegree multidegree(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "zero polynomial has no multidegree");
  const Grading& g = p.ring().grading();
  MultiDegree d = g.degree(p.terms().front().monomial);
  for (const auto& t : p.terms()) {
    if (g.degree(t.monomial) != d) {
      throw Error(ErrorKind::kNotHomogeneous, "not multihomogeneous: " + p.to_string());
    }
  }
  return d;
}

bool is_multihomogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const Grading& g = p.ring().grading();
  MultiDegree d = g.degree(p.terms().front().monomial);
  for (const auto& t : p.terms()) {
    if (g.degree(t.monomial) != d) return false;
  }
  return true;
}

}  // namespace detgb
