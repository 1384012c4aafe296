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

#ifndef DETGB_GROEBNER_HPP_
#define DETGB_GROEBNER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "detgb/marking.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// Normal form of f modulo G: repeatedly cancels the largest term divisible
// by a leading monomial, using the first such generator.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& order);

// Reduction through the marked terms. The marking must carry a witness; the
// result equals reduce() under order_from_weight(witness).
Polynomial marked_reduce(const Polynomial& f, const std::vector<Polynomial>& gens,
                         const Marking& marking);

enum class PairStrategy { kNormal, kFifo };

struct BuchbergerOptions {
  PairStrategy strategy = PairStrategy::kNormal;
  // Called on every polynomial added to the basis during the run.
  std::function<void(const Polynomial&)> observer;
};

struct GroebnerBasis {
  TermOrder order;
  // Reduced and monic, sorted by increasing leading monomial.
  std::vector<Polynomial> generators;
  std::vector<Monomial> leading;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const BuchbergerOptions& options = {});

MonomialIdeal initial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order);

std::size_t codimension(const std::vector<Polynomial>& gens, const TermOrder& order);

struct FailingPair {
  std::size_t i;
  std::size_t j;
  Polynomial normal_form;
};

struct MarkingOutcome {
  Marking marking;
  bool all_spairs_reduce = false;
  std::optional<FailingPair> failing;
};

struct UniversalityReport {
  std::vector<Polynomial> generators;
  std::vector<MarkingOutcome> outcomes;
  bool verdict = false;
  // Distinct ideals generated by the marked terms of passing markings.
  std::vector<MonomialIdeal> initial_ideals;
  std::uint64_t candidates_examined = 0;
};

// Checks every realizable marking: all S-pairs formed from marked terms must
// reduce to zero through the marked terms. Zero generators are rejected.
UniversalityReport universal_gb_certificate(const std::vector<Polynomial>& gens,
                                            std::uint64_t max_markings = 1000000);

// Every initial ideal of the generated ideal. Throws kPrecondition unless the
// generators pass the certificate.
std::vector<MonomialIdeal> all_initial_ideals(const std::vector<Polynomial>& gens,
                                              std::uint64_t max_markings = 1000000);

struct GroebnerCone {
  GroebnerBasis basis;
  WeightVector interior;
  MonomialIdeal initial;
};

struct GroebnerFan {
  // Sorted by initial ideal.
  std::vector<GroebnerCone> cones;
  std::uint64_t basis_computations = 0;
  // False when the walk stopped at the cone limit.
  bool complete = true;
};

// Enumerates every initial ideal by walking across the facets of the
// Groebner cones inside the positive orthant. Works for generators that are
// not a universal basis. Throws kGuardrail past max_cones.
GroebnerFan groebner_fan(const std::vector<Polynomial>& gens, std::size_t max_cones = 20000);

// Same walk, but stops at max_cones and returns the cones found so far with
// complete = false.
GroebnerFan explore_groebner_fan(const std::vector<Polynomial>& gens, std::size_t max_cones);

}  // namespace detgb

#endif  // DETGB_GROEBNER_HPP_
