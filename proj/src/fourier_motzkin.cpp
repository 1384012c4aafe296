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

#include "detgb/fourier_motzkin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detgb/error.hpp"

namespace detgb {

namespace {

struct Overflow {};

// Arithmetic policies so the elimination runs on machine integers first and
// falls back to GMP integers when a coefficient overflows.
struct SmallOps {
  using T = std::int64_t;
  static T from(std::int64_t v) { return v; }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T abs(T a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
  static T div(T a, T b) { return a / b; }
  static int sign(T a) { return (a > 0) - (a < 0); }
  static mpz_class to_mpz(T a) { return mpz_class(static_cast<long>(a)); }
};

struct BigOps {
  using T = mpz_class;
  static T from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T abs(const T& a) { return ::abs(a); }
  static T gcd(const T& a, const T& b) { return ::gcd(a, b); }
  static T div(const T& a, const T& b) { return a / b; }
  static int sign(const T& a) { return sgn(a); }
  static mpz_class to_mpz(const T& a) { return a; }
};

using History = std::vector<std::uint64_t>;

int popcount(const History& h) {
  int c = 0;
  for (auto word : h) c += __builtin_popcountll(word);
  return c;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

template <class Ops>
struct Row {
  std::vector<typename Ops::T> a;
  History history;
};

template <class Ops>
bool normalize(std::vector<typename Ops::T>& a) {
  typename Ops::T g = Ops::from(0);
  for (const auto& x : a) g = Ops::gcd(g, Ops::abs(x));
  if (Ops::sign(g) == 0) return false;
  if (!(g == Ops::from(1))) {
    for (auto& x : a) x = Ops::div(x, g);
  }
  return true;
}

// Drops repeated rows, keeping the copy with the sparsest history.
template <class R>
void dedup(std::vector<R>& rows) {
  std::vector<int> weight(rows.size());
  std::vector<std::size_t> idx(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    idx[i] = i;
    weight[i] = popcount(rows[i].history);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (rows[x].a != rows[y].a) return rows[x].a < rows[y].a;
    return weight[x] < weight[y];
  });
  std::vector<R> out;
  out.reserve(rows.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && rows[idx[k]].a == rows[idx[k - 1]].a) continue;
    out.push_back(std::move(rows[idx[k]]));
  }
  rows = std::move(out);
}

template <class Ops>
std::optional<std::vector<mpq_class>> eliminate(const std::vector<IntRow>& input,
                                                std::size_t n) {
  using R = Row<Ops>;
  std::size_t words = (input.size() + 63) / 64;
  std::vector<std::vector<R>> levels(n + 1);
  std::set<std::vector<typename Ops::T>> initial;
  for (std::size_t k = 0; k < input.size(); ++k) {
    R r;
    for (auto v : input[k]) r.a.push_back(Ops::from(v));
    if (!normalize<Ops>(r.a)) return std::nullopt;
    if (!initial.insert(r.a).second) continue;
    r.history.assign(words, 0);
    r.history[k / 64] |= std::uint64_t{1} << (k % 64);
    levels[0].push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& cur = levels[j];
    std::vector<R> next;
    auto push = [&](R r) { next.push_back(std::move(r)); };
    std::vector<const R*> pos, neg;
    for (const auto& r : cur) {
      int s = Ops::sign(r.a[j]);
      if (s > 0) {
        pos.push_back(&r);
      } else if (s < 0) {
        neg.push_back(&r);
      } else {
        push(r);
      }
    }
    int limit = static_cast<int>(j) + 2;
    for (const R* p : pos) {
      for (const R* q : neg) {
        R c;
        c.history.resize(words);
        for (std::size_t w = 0; w < words; ++w) c.history[w] = p->history[w] | q->history[w];
        if (popcount(c.history) > limit) continue;
        auto fp = p->a[j];
        auto fq = Ops::abs(q->a[j]);
        c.a.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          c.a[i] = Ops::add(Ops::mul(fq, p->a[i]), Ops::mul(fp, q->a[i]));
        }
        if (!normalize<Ops>(c.a)) return std::nullopt;
        push(std::move(c));
      }
    }
    dedup(next);
    levels[j + 1] = std::move(next);
  }
  if (!levels[n].empty()) return std::nullopt;

  std::vector<mpq_class> w(n, 0);
  for (std::size_t j = n; j-- > 0;) {
    std::optional<mpq_class> lo, hi;
    for (const auto& r : levels[j]) {
      int s = Ops::sign(r.a[j]);
      if (s == 0) continue;
      mpq_class rest = 0;
      for (std::size_t i = j + 1; i < n; ++i) rest += mpq_class(Ops::to_mpz(r.a[i])) * w[i];
      mpq_class bound = -rest / mpq_class(Ops::to_mpz(r.a[j]));
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      // Prefer an integer inside the open interval; otherwise the midpoint.
      mpq_class above(floor_q(*lo) + 1);
      w[j] = above < *hi ? above : mpq_class((*lo + *hi) / 2);
    } else if (lo) {
      w[j] = mpq_class(floor_q(*lo) + 1);
    } else if (hi) {
      w[j] = mpq_class(-floor_q(-*hi) - 1);
    } else {
      w[j] = 0;
    }
    w[j].canonicalize();
  }
  return w;
}

std::optional<std::vector<mpq_class>> solve_rational(const std::vector<IntRow>& rows,
                                                     std::size_t n) {
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::kInvalidArgument, "row length mismatch");
  }
  try {
    return eliminate<SmallOps>(rows, n);
  } catch (const Overflow&) {
    return eliminate<BigOps>(rows, n);
  }
}

WeightVector to_primitive_integers(const std::vector<mpq_class>& w) {
  mpz_class denom = 1;
  for (const auto& q : w) denom = lcm(denom, mpz_class(q.get_den()));
  WeightVector out;
  mpz_class g = 0;
  for (const auto& q : w) {
    out.push_back(mpz_class(q * denom));
    g = gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace

IntRow primitive_row(IntRow row) {
  std::int64_t g = 0;
  for (auto x : row) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
  return row;
}

std::vector<IntRow> positivity_rows(std::size_t num_vars) {
  std::vector<IntRow> rows(num_vars, IntRow(num_vars, 0));
  for (std::size_t i = 0; i < num_vars; ++i) rows[i][i] = 1;
  return rows;
}

std::optional<WeightVector> solve_strict(const std::vector<IntRow>& rows, std::size_t num_vars) {
  auto w = solve_rational(rows, num_vars);
  if (!w) return std::nullopt;
  return to_primitive_integers(*w);
}

std::optional<WeightVector> solve_strict_on_hyperplane(const std::vector<IntRow>& rows,
                                                       const IntRow& eq, std::size_t num_vars) {
  std::size_t p = 0;
  while (p < num_vars && eq[p] == 0) ++p;
  if (p == num_vars) throw Error(ErrorKind::kInvalidArgument, "zero hyperplane normal");
  std::int64_t ep = eq[p];
  std::int64_t sign = ep > 0 ? 1 : -1;
  std::vector<IntRow> reduced;
  reduced.reserve(rows.size());
  for (const auto& r : rows) {
    IntRow out(num_vars, 0);
    bool overflow = false;
    for (std::size_t i = 0; i < num_vars; ++i) {
      std::int64_t x, y;
      overflow |= __builtin_mul_overflow(sign * ep, r[i], &x);
      overflow |= __builtin_mul_overflow(sign * r[p], eq[i], &y);
      overflow |= __builtin_sub_overflow(x, y, &out[i]);
    }
    if (overflow) throw Error(ErrorKind::kInvalidArgument, "hyperplane coefficients too large");
    reduced.push_back(primitive_row(std::move(out)));
  }
  auto w = solve_rational(reduced, num_vars);
  if (!w) return std::nullopt;
  mpq_class rest = 0;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (i != p) rest += mpq_class(static_cast<long>(eq[i])) * (*w)[i];
  }
  (*w)[p] = -rest / mpq_class(static_cast<long>(ep));
  (*w)[p].canonicalize();
  return to_primitive_integers(*w);
}

}  // namespace detgb
