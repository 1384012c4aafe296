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

#include "detgb/hilbert.hpp"

#include <algorithm>

#include "detgb/error.hpp"
#include "detgb/groebner.hpp"

namespace detgb {

LaurentPoly LaurentPoly::constant(int num_vars, const mpz_class& c) {
  LaurentPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent e, const mpz_class& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int i) {
  Exponent e(num_vars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

mpz_class LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw Error(ErrorKind::kInvalidArgument, "exponent length mismatch");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (o.num_vars_ != num_vars_) throw Error(ErrorKind::kInvalidArgument, "variable count mismatch");
  LaurentPoly r(num_vars_);
  Exponent sum(num_vars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < num_vars_; ++i) sum[i] = a[i] + b[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(num_vars_, 1);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
  if (static_cast<int>(images.size()) != num_vars_) {
    throw Error(ErrorKind::kInvalidArgument, "one image per variable required");
  }
  int target = images.empty() ? 0 : images.front().num_vars();
  std::vector<std::vector<LaurentPoly>> powers(num_vars_);
  LaurentPoly r(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly t = constant(target, c);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] < 0) throw Error(ErrorKind::kInvalidArgument, "substitution needs non-negative exponents");
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r = r + t;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_one_minus() const {
  std::vector<LaurentPoly> images;
  for (int i = 0; i < num_vars_; ++i) images.push_back(constant(num_vars_, 1) - variable(num_vars_, i));
  return substitute(images);
}

LaurentPoly LaurentPoly::substitute_one_plus() const {
  std::vector<LaurentPoly> images;
  for (int i = 0; i < num_vars_; ++i) images.push_back(constant(num_vars_, 1) + variable(num_vars_, i));
  return substitute(images);
}

LaurentPoly LaurentPoly::substitute_negate() const {
  LaurentPoly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int x : e) deg += x;
    r.add_term(e, (deg % 2 == 0) ? c : mpz_class(-c));
  }
  return r;
}

LaurentPoly LaurentPoly::embed(int num_vars) const {
  if (num_vars < num_vars_) throw Error(ErrorKind::kInvalidArgument, "cannot embed into fewer variables");
  LaurentPoly r(num_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(num_vars, 0);
    r.add_term(f, c);
  }
  return r;
}

std::vector<std::pair<LaurentPoly::Exponent, mpz_class>> LaurentPoly::pairs() const {
  return {terms_.begin(), terms_.end()};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Print by total degree, then exponent descending.
  std::vector<std::pair<Exponent, mpz_class>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da < db;
    return a.first > b.first;
  });
  bool first = true;
  for (const auto& [e, c] : items) {
    bool negative = c < 0;
    mpz_class mag = negative ? mpz_class(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
  }
  return out;
}

namespace {

class KComputer {
 public:
  KComputer(const Ring& ring, PivotStrategy strategy) : ring_(ring), strategy_(strategy) {}

  LaurentPoly run(const MonomialIdeal& m) {
    int blocks = ring_.grading().num_blocks();
    if (m.is_zero()) return LaurentPoly::constant(blocks, 1);
    if (m.is_unit()) return LaurentPoly(blocks);
    auto it = memo_.find(m.generators());
    if (it != memo_.end()) return it->second;
    LaurentPoly result = compute(m);
    memo_.emplace(m.generators(), result);
    return result;
  }

 private:
  LaurentPoly degree_term(const Monomial& u) const {
    return LaurentPoly::monomial(ring_.grading().degree(u));
  }

  LaurentPoly compute(const MonomialIdeal& m) {
    int blocks = ring_.grading().num_blocks();
    const auto& gens = m.generators();
    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a) {
      for (std::size_t b = a + 1; b < gens.size() && coprime; ++b) coprime = gens[a].coprime(gens[b]);
    }
    if (coprime) {
      LaurentPoly r = LaurentPoly::constant(blocks, 1);
      for (const auto& g : gens) r = r * (LaurentPoly::constant(blocks, 1) - degree_term(g));
      return r;
    }
    std::size_t pivot = choose_pivot(gens);
    Monomial x = ring_.variable(pivot);
    return run(m.with(x)) + degree_term(x) * run(m.quotient(x));
  }

  std::size_t choose_pivot(const std::vector<Monomial>& gens) const {
    std::size_t n = ring_.num_vars();
    if (strategy_ == PivotStrategy::kMostFrequent) {
      std::vector<int> count(n, 0);
      for (const auto& g : gens) {
        if (g.degree() < 2) continue;
        for (auto v : g.support()) ++count[v];
      }
      return static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    }
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        Monomial g = gens[a].gcd(gens[b]);
        if (!g.is_one()) return g.support().front();
      }
    }
    return gens.front().support().front();
  }

  const Ring& ring_;
  PivotStrategy strategy_;
  std::map<std::vector<Monomial>, LaurentPoly> memo_;
};

LaurentPoly one(int m) { return LaurentPoly::constant(m, 1); }

LaurentPoly product_of_variables(int m) { return LaurentPoly::monomial(LaurentPoly::Exponent(m, 1)); }

std::vector<LaurentPoly> shifted_variables(int m, int sign) {
  std::vector<LaurentPoly> out;
  for (int i = 0; i < m; ++i) {
    LaurentPoly y = LaurentPoly::variable(m, i);
    out.push_back(sign > 0 ? one(m) + y : one(m) - y);
  }
  return out;
}

}  // namespace

LaurentPoly k_polynomial(const MonomialIdeal& m, PivotStrategy strategy) {
  return KComputer(m.ring(), strategy).run(m);
}

LaurentPoly k_polynomial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!is_multihomogeneous(g)) {
      throw Error(ErrorKind::kNotHomogeneous, "generator is not multihomogeneous: " + g.to_string());
    }
    nonzero.push_back(g);
  }
  if (nonzero.empty()) {
    if (gens.empty()) throw Error(ErrorKind::kInvalidArgument, "no generators");
    return LaurentPoly::constant(gens.front().ring().grading().num_blocks(), 1);
  }
  return k_polynomial(initial_ideal(nonzero, order));
}

LaurentPoly c_polynomial(const LaurentPoly& k) { return k.substitute_one_minus(); }

LaurentPoly g_multidegree(const LaurentPoly& k) {
  LaurentPoly c = c_polynomial(k);
  LaurentPoly g(k.num_vars());
  for (const auto& [a, coeff] : c.terms()) {
    bool minimal = true;
    for (const auto& [b, unused] : c.terms()) {
      if (b == a) continue;
      bool below = true;
      for (std::size_t i = 0; i < a.size(); ++i) below = below && b[i] <= a[i];
      if (below) {
        minimal = false;
        break;
      }
    }
    if (minimal) g.add_term(a, coeff);
  }
  return g;
}

LaurentPoly h_complete(int k, int m) {
  std::vector<LaurentPoly> vars;
  for (int i = 0; i < m; ++i) vars.push_back(LaurentPoly::variable(m, i));
  return h_complete_at(k, vars);
}

LaurentPoly h_complete_at(int k, const std::vector<LaurentPoly>& args) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "h_k needs k >= 0");
  if (args.empty()) throw Error(ErrorKind::kInvalidArgument, "h_k needs at least one argument");
  int target = args.front().num_vars();
  // h_k(a_1..a_r) = sum_j a_r^j h_{k-j}(a_1..a_{r-1}).
  std::vector<LaurentPoly> h(k + 1, LaurentPoly(target));
  h[0] = one(target);
  for (const auto& a : args) {
    std::vector<LaurentPoly> next(k + 1, LaurentPoly(target));
    for (int d = 0; d <= k; ++d) {
      LaurentPoly acc = h[d];
      LaurentPoly power = one(target);
      for (int j = 1; j <= d; ++j) {
        power = power * a;
        acc = acc + power * h[d - j];
      }
      next[d] = acc;
    }
    h = std::move(next);
  }
  return h[k];
}

LaurentPoly k_mn_closed(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorKind::kInvalidArgument, "m and n must be non-negative");
  if (m == 0) return LaurentPoly(0);
  if (n < m) return one(m);
  LaurentPoly sum(m);
  for (int k = 0; k <= n - m; ++k) {
    LaurentPoly term = h_complete(k, m) * LaurentPoly::constant(m, mpz_class(static_cast<unsigned long>(binomial(n, m + k))));
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return one(m) - product_of_variables(m) * sum;
}

bool verify_rg8(int m, int t) {
  LaurentPoly lhs = h_complete_at(t, shifted_variables(m, +1));
  LaurentPoly rhs(m);
  for (int k = 0; k <= t; ++k) {
    rhs = rhs + h_complete(k, m) * LaurentPoly::constant(m, mpz_class(static_cast<unsigned long>(binomial(m + t - 1, m + k - 1))));
  }
  return lhs == rhs;
}

bool verify_rg7(int m, int t) {
  LaurentPoly lhs(m), rhs(m);
  auto shifted = shifted_variables(m, +1);
  for (int k = 0; k <= t; ++k) {
    lhs = lhs + h_complete_at(k, shifted);
    rhs = rhs + h_complete(k, m) * LaurentPoly::constant(m, mpz_class(static_cast<unsigned long>(binomial(m + t, m + k))));
  }
  return lhs == rhs;
}

bool verify_rg5_rg6(int m, int n) {
  if (m < 1 || n < m) throw Error(ErrorKind::kInvalidArgument, "needs 1 <= m <= n");
  auto minus = shifted_variables(m, -1);
  auto plus = shifted_variables(m, +1);
  LaurentPoly l5(m), r5(m), l6(m), r6(m);
  for (int k = 0; k <= n - m; ++k) {
    mpz_class c(static_cast<unsigned long>(binomial(n, m + k)));
    LaurentPoly hk = h_complete(k, m);
    l5 = l5 + h_complete_at(k, minus);
    r5 = (k % 2 == 0) ? r5 + hk * LaurentPoly::constant(m, c) : r5 - hk * LaurentPoly::constant(m, c);
    l6 = l6 + h_complete_at(k, plus);
    r6 = r6 + hk * LaurentPoly::constant(m, c);
  }
  return l5 == r5 && l6 == r6 && l5.substitute_negate() == l6 && r5.substitute_negate() == r6;
}

bool verify_recursion(int m, int n) {
  if (m < 1 || n <= m - 1) throw Error(ErrorKind::kInvalidArgument, "needs m >= 1 and n >= m");
  LaurentPoly ym = LaurentPoly::variable(m, m - 1);
  LaurentPoly rhs = (one(m) - ym) * k_mn_closed(m, n - 1) + ym * k_mn_closed(m - 1, n - 1).embed(m);
  return k_mn_closed(m, n) == rhs;
}

bool verify_rg4(int m, int n) {
  if (m < 1 || n < m) throw Error(ErrorKind::kInvalidArgument, "needs 1 <= m <= n");
  auto minus = shifted_variables(m, -1);
  LaurentPoly sum(m);
  for (int k = 0; k <= n - m; ++k) sum = sum + h_complete_at(k, minus);
  return one(m) - product_of_variables(m) * sum == k_mn_closed(m, n);
}

}  // namespace detgb
