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

#ifndef DETGB_TERM_ORDER_HPP_
#define DETGB_TERM_ORDER_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "detgb/polynomial.hpp"

namespace detgb {

// Integer weights; a rational weight vector is represented by a positive
// multiple, which induces the same order.
using WeightVector = std::vector<mpz_class>;

// A term order over a variable priority list (priority[0] is the largest
// variable). Weighted orders compare by each weight vector in turn and break
// remaining ties lexicographically.
class TermOrder {
 public:
  enum class Kind { kLex, kDegRevLex, kWeighted };

  static TermOrder lex(std::size_t num_vars);
  static TermOrder degrevlex(std::size_t num_vars);
  // Throws kInvalidArgument unless the weights together with the lex
  // tiebreak make every variable larger than 1.
  static TermOrder weighted(std::vector<WeightVector> weights);

  // "lex", "degrevlex" or "weight:w1,w2,...", optionally followed by
  // "vars:a>b>..." listing every ring variable; parts are separated by
  // spaces or ';'.
  static TermOrder parse(std::string_view text, const Ring& ring);

  // priority must be a permutation of the variables.
  TermOrder with_priority(std::vector<std::size_t> priority) const;

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  const std::vector<WeightVector>& weights() const { return weights_; }
  bool has_default_priority() const;

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  std::string to_string(const Ring& ring) const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.priority_ == b.priority_ && a.weights_ == b.weights_;
  }

 private:
  TermOrder(Kind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {}

  std::strong_ordering compare_lex(const Monomial& u, const Monomial& v) const;
  std::strong_ordering compare_revlex(const Monomial& u, const Monomial& v) const;
  std::strong_ordering compare_weights(const Monomial& u, const Monomial& v) const;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::vector<WeightVector> weights_;
  // Copies of weights_ when every entry fits comfortably in 32 bits.
  std::vector<std::vector<std::int64_t>> small_weights_;
};

// The largest term of p. Throws kZeroPolynomial.
Term leading_term(const TermOrder& order, const Polynomial& p);

// Weighted order with lex tiebreak on the default variable order.
TermOrder order_from_weight(const WeightVector& w);

}  // namespace detgb

#endif  // DETGB_TERM_ORDER_HPP_
