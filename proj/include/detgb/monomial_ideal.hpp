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

#ifndef DETGB_MONOMIAL_IDEAL_HPP_
#define DETGB_MONOMIAL_IDEAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detgb/ring.hpp"

namespace detgb {

// A monomial ideal kept as its minimal generators, sorted by total degree
// and then by exponent vector (descending).
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring);
  // Ideal generated by the given variables.
  static MonomialIdeal prime(RingPtr ring, const std::vector<std::size_t>& vars);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  // Largest total degree of a minimal generator; -1 for the zero ideal.
  int max_degree() const;

  MonomialIdeal quotient(const Monomial& m) const;
  MonomialIdeal with(const Monomial& m) const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring() == b.ring() && a.gens_ == b.gens_;
  }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ < b.gens_; }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

bool is_radical(const MonomialIdeal& m);
MonomialIdeal radical(const MonomialIdeal& m);

// Strong stability inside each grading block, with the block's variables
// ordered by declaration (the first variable of a block is the largest).
bool is_borel_fixed(const MonomialIdeal& m);

// Smallest Borel-fixed ideal containing the monomials.
MonomialIdeal borel_closure(const RingPtr& ring, const std::vector<Monomial>& monomials);

// P_b: generated by the first b_i variables of block i.
struct VariablePrime {
  MultiDegree b;
  friend bool operator==(const VariablePrime&, const VariablePrime&) = default;
};

MonomialIdeal variable_prime_ideal(const RingPtr& ring, const VariablePrime& p);
// The b with P = P_b, when the prime has that form.
std::optional<VariablePrime> as_variable_prime(const MonomialIdeal& prime);
// Every b with 0 <= b_i <= block size.
std::vector<VariablePrime> all_variable_primes(const Ring& ring);

// Minimal primes as ideals generated by variables, sorted.
std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& m);
// Codimension: size of a smallest minimal prime.
std::size_t monomial_codimension(const MonomialIdeal& m);

// Length of (S/M) localized at the variable prime P; 0 when M is not
// contained in P, nullopt when the length is infinite.
std::optional<std::uint64_t> localized_length(const MonomialIdeal& m, const MonomialIdeal& prime);

// Minimal transversals of the generator supports. Throws kInvalidArgument on
// non-squarefree input.
MonomialIdeal alexander_dual(const MonomialIdeal& m);

// Minimal transversals of a family of sets given as bitmasks.
std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& sets);

struct Polarization {
  MonomialIdeal ideal;
  // Fresh variable -> (original variable, copy index starting at 1).
  std::vector<std::pair<std::size_t, int>> origin;
};

// x^e becomes the product of copies name_1..name_e. Copies inherit the
// grading block of their variable.
Polarization polarize(const MonomialIdeal& m);

// For a radical Borel-fixed ideal with minimal primes P_b1..P_bc: the ideal
// J = (y^b1, ..., y^bc) in one variable per block is polarized, copy k of
// block i is identified with the k-th variable of block i, and the Alexander
// dual is taken in the original ring.
MonomialIdeal borel_reconstruction(const MonomialIdeal& m);

// (x_1_j1 * ... * x_m_jm : j1 + ... + jm <= n) in the row-graded m x n ring.
MonomialIdeal predicted_gin_row(int m, int n, const Field& field);

std::uint64_t binomial(int n, int k);

}  // namespace detgb

#endif  // DETGB_MONOMIAL_IDEAL_HPP_
