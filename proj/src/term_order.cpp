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

#include "detgb/term_order.hpp"

#include <algorithm>
#include <numeric>

#include "detgb/error.hpp"

namespace detgb {

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

WeightVector parse_weights(std::string_view text) {
  std::vector<mpq_class> values;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw Error(ErrorKind::kParse, "empty weight entry");
    mpq_class q;
    if (q.set_str(item, 10) != 0) throw Error(ErrorKind::kParse, "bad weight '" + item + "'");
    q.canonicalize();
    values.push_back(q);
  }
  mpz_class denom = 1;
  for (const auto& q : values) denom = lcm(denom, mpz_class(q.get_den()));
  WeightVector w;
  for (const auto& q : values) w.push_back(mpz_class(q * denom));
  return w;
}

}  // namespace

TermOrder TermOrder::lex(std::size_t num_vars) {
  return TermOrder(Kind::kLex, identity_priority(num_vars));
}

TermOrder TermOrder::degrevlex(std::size_t num_vars) {
  return TermOrder(Kind::kDegRevLex, identity_priority(num_vars));
}

TermOrder TermOrder::weighted(std::vector<WeightVector> weights) {
  if (weights.empty()) throw Error(ErrorKind::kInvalidArgument, "no weight vectors");
  std::size_t n = weights.front().size();
  for (const auto& w : weights) {
    if (w.size() != n) throw Error(ErrorKind::kInvalidArgument, "weight vectors differ in length");
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& w : weights) {
      if (w[v] < 0) {
        throw Error(ErrorKind::kInvalidArgument, "weights do not define a term order");
      }
      if (w[v] > 0) break;
    }
  }
  TermOrder order(Kind::kWeighted, identity_priority(n));
  bool small = true;
  for (const auto& w : weights) {
    for (const auto& x : w) small = small && abs(x) < (mpz_class(1) << 31);
  }
  if (small) {
    for (const auto& w : weights) {
      std::vector<std::int64_t> row;
      for (const auto& x : w) row.push_back(x.get_si());
      order.small_weights_.push_back(std::move(row));
    }
  }
  order.weights_ = std::move(weights);
  return order;
}

TermOrder TermOrder::with_priority(std::vector<std::size_t> priority) const {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_priority(num_vars())) {
    throw Error(ErrorKind::kInvalidArgument, "variable priority is not a permutation");
  }
  TermOrder copy(*this);
  copy.priority_ = std::move(priority);
  return copy;
}

bool TermOrder::has_default_priority() const {
  return priority_ == identity_priority(priority_.size());
}

std::strong_ordering TermOrder::compare_lex(const Monomial& u, const Monomial& v) const {
  for (auto var : priority_) {
    if (u[var] != v[var]) return u[var] <=> v[var];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare_revlex(const Monomial& u, const Monomial& v) const {
  for (std::size_t k = priority_.size(); k-- > 0;) {
    auto var = priority_[k];
    if (u[var] != v[var]) return v[var] <=> u[var];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare_weights(const Monomial& u, const Monomial& v) const {
  if (!small_weights_.empty()) {
    for (const auto& w : small_weights_) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) d += w[i] * (static_cast<std::int64_t>(u[i]) - v[i]);
      }
      if (d != 0) return d <=> 0;
    }
    return std::strong_ordering::equal;
  }
  for (const auto& w : weights_) {
    mpz_class d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (u[i] != v[i]) d += w[i] * (static_cast<long>(u[i]) - v[i]);
    }
    int s = sgn(d);
    if (s != 0) return s <=> 0;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& u, const Monomial& v) const {
  switch (kind_) {
    case Kind::kLex:
      return compare_lex(u, v);
    case Kind::kDegRevLex: {
      int du = u.degree(), dv = v.degree();
      if (du != dv) return du <=> dv;
      return compare_revlex(u, v);
    }
    case Kind::kWeighted: {
      auto c = compare_weights(u, v);
      return c != 0 ? c : compare_lex(u, v);
    }
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::parse(std::string_view text, const Ring& ring) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', ' ');
  std::vector<std::string> parts;
  for (const auto& p : split(normalized, ' ')) {
    if (!p.empty()) parts.push_back(p);
  }
  if (parts.empty()) throw Error(ErrorKind::kParse, "empty term order");
  std::optional<TermOrder> order;
  std::vector<WeightVector> rows;
  std::optional<std::vector<std::size_t>> priority;
  for (const auto& part : parts) {
    if (part == "lex") {
      order = lex(ring.num_vars());
    } else if (part == "degrevlex") {
      order = degrevlex(ring.num_vars());
    } else if (part.rfind("weight:", 0) == 0) {
      WeightVector w = parse_weights(std::string_view(part).substr(7));
      if (w.size() != ring.num_vars()) {
        throw Error(ErrorKind::kParse, "weight vector length " + std::to_string(w.size()) +
                                           " does not match " + std::to_string(ring.num_vars()) +
                                           " variables");
      }
      rows.push_back(std::move(w));
      order = weighted(rows);
    } else if (part.rfind("vars:", 0) == 0) {
      std::vector<std::size_t> p;
      for (const auto& name : split(std::string_view(part).substr(5), '>')) {
        auto var = ring.find(name);
        if (!var) throw Error(ErrorKind::kParse, "unknown variable '" + name + "' in order");
        p.push_back(*var);
      }
      priority = std::move(p);
    } else {
      throw Error(ErrorKind::kParse, "unknown term order component '" + part + "'");
    }
  }
  if (!order) throw Error(ErrorKind::kParse, "term order kind missing");
  if (priority) {
    if (priority->size() != ring.num_vars()) {
      throw Error(ErrorKind::kParse, "vars: must list every ring variable exactly once");
    }
    try {
      return order->with_priority(std::move(*priority));
    } catch (const Error&) {
      throw Error(ErrorKind::kParse, "vars: must list every ring variable exactly once");
    }
  }
  return *order;
}

std::string TermOrder::to_string(const Ring& ring) const {
  std::string out;
  switch (kind_) {
    case Kind::kLex:
      out = "lex";
      break;
    case Kind::kDegRevLex:
      out = "degrevlex";
      break;
    case Kind::kWeighted:
      for (std::size_t r = 0; r < weights_.size(); ++r) {
        if (r > 0) out += ';';
        out += "weight:";
        for (std::size_t i = 0; i < weights_[r].size(); ++i) {
          if (i > 0) out += ',';
          out += weights_[r][i].get_str();
        }
      }
      break;
  }
  if (!has_default_priority()) {
    out += ";vars:";
    for (std::size_t k = 0; k < priority_.size(); ++k) {
      if (k > 0) out += '>';
      out += ring.name(priority_[k]);
    }
  }
  return out;
}

Term leading_term(const TermOrder& order, const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "zero polynomial has no leading term");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

TermOrder order_from_weight(const WeightVector& w) {
  return TermOrder::weighted({w});
}

}  // namespace detgb
