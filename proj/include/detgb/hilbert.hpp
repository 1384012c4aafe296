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

#ifndef DETGB_HILBERT_HPP_
#define DETGB_HILBERT_HPP_

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "detgb/monomial_ideal.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// Integer polynomial in y_1..y_m with possibly negative exponents.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}
  static LaurentPoly constant(int num_vars, const mpz_class& c);
  static LaurentPoly monomial(Exponent e, const mpz_class& c = 1);
  static LaurentPoly variable(int num_vars, int i);

  int num_vars() const { return num_vars_; }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned e) const;

  // y_i -> images[i]; every exponent must be non-negative.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;
  LaurentPoly substitute_one_minus() const;
  LaurentPoly substitute_one_plus() const;
  LaurentPoly substitute_negate() const;
  // Same polynomial in more variables (new exponents zero).
  LaurentPoly embed(int num_vars) const;

  // Exponent/coefficient pairs in increasing exponent order.
  std::vector<std::pair<Exponent, mpz_class>> pairs() const;
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  int num_vars_;
  std::map<Exponent, mpz_class> terms_;
};

enum class PivotStrategy { kMostFrequent, kFirstShared };

// K(S/M, y) over the ring's block grading, by the pivot recursion
// K(S/M) = K(S/(M + x)) + y^deg(x) K(S/(M : x)).
LaurentPoly k_polynomial(const MonomialIdeal& m, PivotStrategy strategy = PivotStrategy::kMostFrequent);

// K-polynomial of the initial ideal. Throws kNotHomogeneous.
LaurentPoly k_polynomial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order);

LaurentPoly c_polynomial(const LaurentPoly& k);
// Support-minimal terms of the C-polynomial of k.
LaurentPoly g_multidegree(const LaurentPoly& k);

// 1 - y_1...y_m sum_{k=0}^{n-m} (-1)^k C(n, m+k) h_k(y), with K_{0,n} = 0
// and K_{m,n} = 1 for n < m.
LaurentPoly k_mn_closed(int m, int n);

// Complete homogeneous symmetric polynomial of degree k in y_1..y_m.
LaurentPoly h_complete(int k, int m);
// h_k evaluated at the given polynomials.
LaurentPoly h_complete_at(int k, const std::vector<LaurentPoly>& args);

bool verify_rg8(int m, int t);
bool verify_rg7(int m, int t);
bool verify_rg5_rg6(int m, int n);
bool verify_recursion(int m, int n);
// The filtration formula 1 - y_1..y_m sum_k h_k(1 - y) against k_mn_closed.
bool verify_rg4(int m, int n);

}  // namespace detgb

#endif  // DETGB_HILBERT_HPP_
