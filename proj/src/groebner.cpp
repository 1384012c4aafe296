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

#include "detgb/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "detgb/error.hpp"
#include "detgb/fourier_motzkin.hpp"

namespace detgb {

namespace {

using TermList = std::vector<Term>;

TermList sorted_terms(const Polynomial& p, const TermOrder& order) {
  TermList t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return t;
}

// p[from..] - c * m * g, where g is sorted by the same order.
TermList sub_multiple(const TermList& p, std::size_t from, const Scalar& c, const Monomial& m,
                      const TermList& g, const TermOrder& order, const Field& field) {
  TermList out;
  out.reserve(p.size() - from + g.size());
  std::size_t a = from, b = 0;
  while (a < p.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(p[a++]);
      continue;
    }
    Monomial gm = g[b].monomial * m;
    if (a == p.size()) {
      out.push_back(Term{std::move(gm), field.neg(field.mul(c, g[b].coeff))});
      ++b;
      continue;
    }
    auto cmp = order.compare(p[a].monomial, gm);
    if (cmp > 0) {
      out.push_back(p[a++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), field.neg(field.mul(c, g[b].coeff))});
      ++b;
    } else {
      Scalar s = field.sub(p[a].coeff, field.mul(c, g[b].coeff));
      if (!field.is_zero(s)) out.push_back(Term{p[a].monomial, s});
      ++a;
      ++b;
    }
  }
  return out;
}

struct Reducer {
  const std::vector<TermList>* gens;
  const TermOrder* order;
  const Field* field;

  // Full reduction; generators are led by their first term.
  TermList reduce(TermList p) const {
    TermList rest;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Term& lt = p[pos];
      const TermList* divisor = nullptr;
      for (const auto& g : *gens) {
        if (!g.empty() && g.front().monomial.divides(lt.monomial)) {
          divisor = &g;
          break;
        }
      }
      if (!divisor) {
        rest.push_back(lt);
        ++pos;
        continue;
      }
      Scalar c = field->div(lt.coeff, divisor->front().coeff);
      Monomial q = lt.monomial / divisor->front().monomial;
      p = sub_multiple(p, pos, c, q, *divisor, *order, *field);
      pos = 0;
    }
    return rest;
  }
};

Polynomial to_polynomial(const RingPtr& ring, TermList t) {
  return Polynomial::from_terms(ring, std::move(t));
}

void make_monic(TermList& t, const Field& field) {
  if (t.empty() || field.is_one(t.front().coeff)) return;
  Scalar inv = field.inv(t.front().coeff);
  for (auto& term : t) term.coeff = field.mul(term.coeff, inv);
}

TermList s_polynomial(const TermList& f, const TermList& g, const TermOrder& order,
                      const Field& field) {
  Monomial l = f.front().monomial.lcm(g.front().monomial);
  Monomial mf = l / f.front().monomial;
  Monomial mg = l / g.front().monomial;
  TermList scaled;
  scaled.reserve(f.size());
  Scalar inv_f = field.inv(f.front().coeff);
  for (const auto& t : f) scaled.push_back(Term{t.monomial * mf, field.mul(t.coeff, inv_f)});
  Scalar c = field.inv(g.front().coeff);
  TermList s = sub_multiple(scaled, 0, c, mg, g, order, field);
  return s;
}

void check_ring(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) require_same_ring(g.ring(), gens.front().ring());
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& order) {
  std::vector<TermList> sorted;
  for (const auto& g : gens) {
    require_same_ring(f.ring(), g.ring());
    if (!g.is_zero()) sorted.push_back(sorted_terms(g, order));
  }
  Reducer r{&sorted, &order, &f.field()};
  return to_polynomial(f.ring_ptr(), r.reduce(sorted_terms(f, order)));
}

Polynomial marked_reduce(const Polynomial& f, const std::vector<Polynomial>& gens,
                         const Marking& marking) {
  if (!marking.witness) {
    throw Error(ErrorKind::kPrecondition, "marking has no realizability witness");
  }
  if (marking.chosen.size() != gens.size()) {
    throw Error(ErrorKind::kInvalidArgument, "marking does not match the generators");
  }
  TermOrder order = order_from_weight(*marking.witness);
  std::vector<TermList> sorted;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_ring(f.ring(), gens[i].ring());
    sorted.push_back(sorted_terms(gens[i], order));
    if (sorted.back().front().monomial != marking.chosen[i]) {
      throw Error(ErrorKind::kPrecondition, "witness does not realize the marking");
    }
  }
  Reducer r{&sorted, &order, &f.field()};
  return to_polynomial(f.ring_ptr(), r.reduce(sorted_terms(f, order)));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const BuchbergerOptions& options) {
  if (gens.empty()) throw Error(ErrorKind::kInvalidArgument, "no generators");
  check_ring(gens);
  const RingPtr& ring = gens.front().ring_ptr();
  if (order.num_vars() != ring->num_vars()) {
    throw Error(ErrorKind::kInvalidArgument, "term order does not match the ring");
  }
  const Field& field = ring->field();
  std::vector<TermList> basis;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  Reducer reducer{&basis, &order, &field};

  auto add = [&](TermList t) {
    make_monic(t, field);
    if (options.observer) options.observer(to_polynomial(ring, t));
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back(Pair{i, k, basis[i].front().monomial.lcm(t.front().monomial)});
      pending.insert({i, k});
    }
    basis.push_back(std::move(t));
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    TermList r = reducer.reduce(sorted_terms(g, order));
    if (!r.empty()) add(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t pick = 0;
    if (options.strategy == PairStrategy::kNormal) {
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        if (order.compare(pairs[k].lcm, pairs[pick].lcm) < 0) pick = k;
      }
    }
    Pair p = pairs[pick];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));
    pending.erase({p.i, p.j});

    const Monomial& li = basis[p.i].front().monomial;
    const Monomial& lj = basis[p.j].front().monomial;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].front().monomial.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(p.i, k)) && !pending.count(key(p.j, k));
    }
    if (chain) continue;
    TermList s = reducer.reduce(s_polynomial(basis[p.i], basis[p.j], order, field));
    if (!s.empty()) add(std::move(s));
  }

  // Minimalize, then reduce tails.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(basis[a].front().monomial, basis[b].front().monomial) < 0;
  });
  std::vector<TermList> kept;
  for (auto k : idx) {
    bool redundant = false;
    for (const auto& h : kept) {
      if (h.front().monomial.divides(basis[k].front().monomial)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(basis[k]);
  }
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<TermList> others;
    for (std::size_t o = 0; o < kept.size(); ++o) {
      if (o != k) others.push_back(kept[o]);
    }
    Reducer r{&others, &order, &field};
    TermList tail(kept[k].begin() + 1, kept[k].end());
    TermList reduced{kept[k].front()};
    for (auto& t : r.reduce(std::move(tail))) reduced.push_back(std::move(t));
    kept[k] = std::move(reduced);
  }
  GroebnerBasis out{order, {}, {}};
  for (auto& t : kept) {
    out.leading.push_back(t.front().monomial);
    out.generators.push_back(to_polynomial(ring, std::move(t)));
  }
  return out;
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order) {
  GroebnerBasis gb = buchberger(gens, order);
  return MonomialIdeal(gens.front().ring_ptr(), gb.leading);
}

std::size_t codimension(const std::vector<Polynomial>& gens, const TermOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return 0;
  MonomialIdeal in = initial_ideal(nonzero, order);
  if (in.is_unit()) throw Error(ErrorKind::kInvalidArgument, "unit ideal has no codimension");
  return monomial_codimension(in);
}

UniversalityReport universal_gb_certificate(const std::vector<Polynomial>& gens,
                                            std::uint64_t max_markings) {
  UniversalityReport report;
  report.generators = gens;
  if (gens.empty()) throw Error(ErrorKind::kInvalidArgument, "no generators");
  check_ring(gens);
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "zero generator in certificate");
    if (!is_multihomogeneous(g)) {
      throw Error(ErrorKind::kNotHomogeneous, "generator is not multihomogeneous: " + g.to_string());
    }
  }
  const RingPtr& ring = gens.front().ring_ptr();
  const Field& field = ring->field();
  std::set<MonomialIdeal> ideals;
  MarkingSearchStats stats;
  for_each_realizable_marking(
      gens, max_markings,
      [&](const Marking& mk) {
        TermOrder order = order_from_weight(*mk.witness);
        std::vector<TermList> sorted;
        for (const auto& g : gens) sorted.push_back(sorted_terms(g, order));
        Reducer r{&sorted, &order, &field};
        MarkingOutcome outcome{mk, true, std::nullopt};
        for (std::size_t i = 0; i < sorted.size() && outcome.all_spairs_reduce; ++i) {
          for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (sorted[i].front().monomial.coprime(sorted[j].front().monomial)) continue;
            TermList nf = r.reduce(s_polynomial(sorted[i], sorted[j], order, field));
            if (!nf.empty()) {
              outcome.all_spairs_reduce = false;
              outcome.failing = FailingPair{i, j, to_polynomial(ring, std::move(nf))};
              break;
            }
          }
        }
        if (outcome.all_spairs_reduce) ideals.insert(MonomialIdeal(ring, mk.chosen));
        report.outcomes.push_back(std::move(outcome));
      },
      &stats);
  report.candidates_examined = stats.candidates_examined;
  report.verdict = std::all_of(report.outcomes.begin(), report.outcomes.end(),
                               [](const MarkingOutcome& o) { return o.all_spairs_reduce; });
  report.initial_ideals.assign(ideals.begin(), ideals.end());
  return report;
}

std::vector<MonomialIdeal> all_initial_ideals(const std::vector<Polynomial>& gens,
                                              std::uint64_t max_markings) {
  UniversalityReport report = universal_gb_certificate(gens, max_markings);
  if (!report.verdict) {
    throw Error(ErrorKind::kPrecondition,
                "generators are not a universal Groebner basis; initial ideals would be incomplete");
  }
  return report.initial_ideals;
}

namespace {

std::vector<IntRow> cone_rows(const GroebnerBasis& gb) {
  std::set<IntRow> rows;
  for (std::size_t k = 0; k < gb.generators.size(); ++k) {
    const Monomial& lead = gb.leading[k];
    for (const auto& t : gb.generators[k].terms()) {
      if (t.monomial == lead) continue;
      IntRow r(lead.size());
      for (std::size_t v = 0; v < lead.size(); ++v) r[v] = static_cast<std::int64_t>(lead[v]) - t.monomial[v];
      rows.insert(primitive_row(std::move(r)));
    }
  }
  return {rows.begin(), rows.end()};
}

GroebnerFan walk_fan(const std::vector<Polynomial>& gens, std::size_t max_cones, bool strict) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) throw Error(ErrorKind::kInvalidArgument, "no nonzero generators");
  check_ring(nonzero);
  for (const auto& g : nonzero) {
    if (!g.is_homogeneous()) {
      throw Error(ErrorKind::kNotHomogeneous, "fan walk needs homogeneous generators");
    }
  }
  const RingPtr& ring = nonzero.front().ring_ptr();
  std::size_t n = ring->num_vars();
  GroebnerFan fan;
  std::map<MonomialIdeal, std::size_t> index;
  std::deque<std::size_t> queue;

  auto admit = [&](GroebnerBasis gb) {
    MonomialIdeal in(ring, gb.leading);
    if (index.count(in)) return;
    if (fan.cones.size() >= max_cones) {
      if (strict) {
        throw Error(ErrorKind::kGuardrail,
                    "Groebner fan has more than " + std::to_string(max_cones) + " cones");
      }
      fan.complete = false;
      return;
    }
    std::vector<IntRow> rows = cone_rows(gb);
    std::vector<IntRow> all = rows;
    for (auto& r : positivity_rows(n)) all.push_back(std::move(r));
    auto interior = solve_strict(all, n);
    if (!interior) throw Error(ErrorKind::kInvalidArgument, "Groebner cone has empty interior");
    index.emplace(in, fan.cones.size());
    queue.push_back(fan.cones.size());
    fan.cones.push_back(GroebnerCone{std::move(gb), std::move(*interior), std::move(in)});
  };

  ++fan.basis_computations;
  admit(buchberger(nonzero, TermOrder::degrevlex(n)));
  while (!queue.empty() && fan.complete) {
    std::size_t c = queue.front();
    queue.pop_front();
    std::vector<IntRow> rows = cone_rows(fan.cones[c].basis);
    std::vector<Polynomial> basis = fan.cones[c].basis.generators;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<IntRow> others;
      for (std::size_t o = 0; o < rows.size(); ++o) {
        if (o != k) others.push_back(rows[o]);
      }
      for (auto& r : positivity_rows(n)) others.push_back(std::move(r));
      auto omega = solve_strict_on_hyperplane(others, rows[k], n);
      if (!omega) continue;
      WeightVector away(n);
      for (std::size_t v = 0; v < n; ++v) away[v] = -rows[k][v];
      TermOrder across = TermOrder::weighted({*omega, away});
      ++fan.basis_computations;
      admit(buchberger(basis, across));
      if (!fan.complete) break;
    }
  }
  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const GroebnerCone& a, const GroebnerCone& b) { return a.initial < b.initial; });
  return fan;
}

}  // namespace

GroebnerFan groebner_fan(const std::vector<Polynomial>& gens, std::size_t max_cones) {
  return walk_fan(gens, max_cones, true);
}

GroebnerFan explore_groebner_fan(const std::vector<Polynomial>& gens, std::size_t max_cones) {
  return walk_fan(gens, max_cones, false);
}

}  // namespace detgb
