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

#ifndef DETGB_MATROID_HPP_
#define DETGB_MATROID_HPP_

#include <cstdint>
#include <vector>

#include "detgb/determinantal.hpp"
#include "detgb/monomial_ideal.hpp"

namespace detgb {

// Matroid on {1..n} given by its bases as bitmasks (bit j-1 for element j).
class Matroid {
 public:
  // Validates the basis exchange axiom when n <= 12.
  static Matroid from_bases(int n, std::vector<std::uint32_t> bases);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<std::uint32_t>& bases() const { return bases_; }
  bool is_basis(std::uint32_t set) const;
  bool is_independent(std::uint32_t set) const;
  // Minimal dependent sets.
  std::vector<std::uint32_t> circuits() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<std::uint32_t> bases_;
};

// Bases are the column sets of nonzero maximal minors. Throws
// kPrecondition when every maximal minor vanishes.
Matroid column_matroid(const std::vector<Minor>& minors, int n);
Matroid dual_matroid(const Matroid& m);
Matroid uniform_matroid(int r, int n);

// Simplicial complex on {1..n} given by its facets.
class SimplicialComplex {
 public:
  SimplicialComplex(int n, std::vector<std::uint32_t> facets);

  int vertices() const { return n_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }
  bool contains(std::uint32_t face) const;
  // Faces are complements of non-faces.
  SimplicialComplex alexander_dual() const;
  // Minimal non-faces.
  std::vector<std::uint32_t> minimal_nonfaces() const;

 private:
  int n_;
  std::vector<std::uint32_t> facets_;
};

SimplicialComplex independence_complex(const Matroid& m);

// Generators x_F for the minimal non-faces F; vertex j maps to vars[j-1].
MonomialIdeal stanley_reisner(const SimplicialComplex& c, const RingPtr& ring,
                              const std::vector<std::size_t>& vars);

// (x_1_j1 * ... * x_1_jm : minor [j1..jm] nonzero) in the ring of L.
MonomialIdeal predicted_gin_column(const LinearMatrix& l);

}  // namespace detgb

#endif  // DETGB_MATROID_HPP_
