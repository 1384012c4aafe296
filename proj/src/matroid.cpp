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

#include "detgb/matroid.hpp"

#include <algorithm>

#include "detgb/error.hpp"

namespace detgb {

namespace {

std::uint32_t full(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<std::uint32_t> bases) {
  if (n < 0 || n > 30) throw Error(ErrorKind::kInvalidArgument, "matroid ground set too large");
  if (bases.empty()) throw Error(ErrorKind::kInvalidArgument, "a matroid needs a basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  Matroid m;
  m.n_ = n;
  m.rank_ = __builtin_popcount(bases.front());
  for (auto b : bases) {
    if ((b & ~full(n)) != 0) throw Error(ErrorKind::kInvalidArgument, "basis outside ground set");
    if (__builtin_popcount(b) != m.rank_) throw Error(ErrorKind::kInvalidArgument, "bases differ in size");
  }
  m.bases_ = std::move(bases);
  if (n <= 12) {
    for (auto a : m.bases_) {
      for (auto b : m.bases_) {
        for (std::uint32_t x = a & ~b; x != 0; x &= x - 1) {
          std::uint32_t ex = x & -x;
          bool found = false;
          for (std::uint32_t y = b & ~a; y != 0 && !found; y &= y - 1) {
            found = m.is_basis((a & ~ex) | (y & -y));
          }
          if (!found) throw Error(ErrorKind::kInvalidArgument, "basis exchange axiom fails");
        }
      }
    }
  }
  return m;
}

bool Matroid::is_basis(std::uint32_t set) const {
  return std::binary_search(bases_.begin(), bases_.end(), set);
}

bool Matroid::is_independent(std::uint32_t set) const {
  return std::any_of(bases_.begin(), bases_.end(), [&](std::uint32_t b) { return (set & b) == set; });
}

std::vector<std::uint32_t> Matroid::circuits() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s <= full(n_); ++s) {
    if (is_independent(s)) continue;
    bool minimal = true;
    for (std::uint32_t x = s; x != 0 && minimal; x &= x - 1) minimal = is_independent(s & ~(x & -x));
    if (minimal) out.push_back(s);
    if (s == full(n_)) break;
  }
  return out;
}

Matroid column_matroid(const std::vector<Minor>& minors, int n) {
  std::vector<std::uint32_t> bases;
  for (const auto& mi : minors) {
    if (mi.value.is_zero()) continue;
    std::uint32_t b = 0;
    for (int c : mi.columns) b |= 1u << (c - 1);
    bases.push_back(b);
  }
  if (bases.empty()) throw Error(ErrorKind::kPrecondition, "all maximal minors vanish; rank is below m");
  return Matroid::from_bases(n, std::move(bases));
}

Matroid dual_matroid(const Matroid& m) {
  std::vector<std::uint32_t> bases;
  for (auto b : m.bases()) bases.push_back(full(m.ground_size()) & ~b);
  return Matroid::from_bases(m.ground_size(), std::move(bases));
}

Matroid uniform_matroid(int r, int n) {
  std::vector<std::uint32_t> bases;
  for (const auto& s : column_subsets(n, r)) {
    std::uint32_t b = 0;
    for (int c : s) b |= 1u << (c - 1);
    bases.push_back(b);
  }
  return Matroid::from_bases(n, std::move(bases));
}

SimplicialComplex::SimplicialComplex(int n, std::vector<std::uint32_t> facets) : n_(n) {
  if (n < 0 || n > 30) throw Error(ErrorKind::kInvalidArgument, "complex has too many vertices");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto f : facets) {
    bool maximal = std::none_of(facets.begin(), facets.end(),
                                [&](std::uint32_t g) { return g != f && (f & g) == f; });
    if (maximal) facets_.push_back(f);
  }
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](std::uint32_t f) { return (face & f) == face; });
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
  // Facets of the dual are complements of minimal non-faces.
  std::vector<std::uint32_t> facets;
  for (auto nf : minimal_nonfaces()) facets.push_back(full(n_) & ~nf);
  return SimplicialComplex(n_, std::move(facets));
}

std::vector<std::uint32_t> SimplicialComplex::minimal_nonfaces() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0;; ++s) {
    if (!contains(s)) {
      bool minimal = true;
      for (std::uint32_t x = s; x != 0 && minimal; x &= x - 1) minimal = contains(s & ~(x & -x));
      if (minimal) out.push_back(s);
    }
    if (s == full(n_)) break;
  }
  return out;
}

SimplicialComplex independence_complex(const Matroid& m) {
  return SimplicialComplex(m.ground_size(), m.bases());
}

MonomialIdeal stanley_reisner(const SimplicialComplex& c, const RingPtr& ring,
                              const std::vector<std::size_t>& vars) {
  if (static_cast<int>(vars.size()) != c.vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "vertex map does not match the complex");
  }
  std::vector<Monomial> gens;
  for (auto nf : c.minimal_nonfaces()) {
    Monomial u = ring->one();
    for (int j = 0; j < c.vertices(); ++j) {
      if (nf >> j & 1) u.set(vars[j], 1);
    }
    gens.push_back(std::move(u));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal predicted_gin_column(const LinearMatrix& l) {
  std::vector<Monomial> gens;
  for (const auto& mi : maximal_minors(l)) {
    if (mi.value.is_zero()) continue;
    Monomial u = l.ring().one();
    for (int c : mi.columns) {
      auto v = l.ring().find("x_1_" + std::to_string(c));
      if (!v) throw Error(ErrorKind::kInvalidArgument, "matrix ring lacks x_1_j variables");
      u.set(*v, 1);
    }
    gens.push_back(std::move(u));
  }
  return MonomialIdeal(l.ring_ptr(), std::move(gens));
}

}  // namespace detgb
