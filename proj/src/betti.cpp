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

#include "detgb/betti.hpp"

#include <algorithm>
#include <set>

#include "detgb/error.hpp"

namespace detgb {

namespace {

std::size_t matrix_rank(const Field& field, std::vector<std::vector<Scalar>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a.front().size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && field.is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    Scalar inv = field.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (field.is_zero(a[r][c])) continue;
      Scalar f = field.mul(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = field.sub(a[r][k], field.mul(f, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// Reduced homology dimensions of a complex given by faces grouped by size
// (faces[s] holds the faces with s vertices, faces[0] = {empty}).
std::vector<std::uint64_t> reduced_homology(const Field& field,
                                            const std::vector<std::vector<std::uint64_t>>& faces) {
  std::size_t top = faces.size();
  // rank of the boundary from size s to size s-1.
  std::vector<std::size_t> rank(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) {
    const auto& lower = faces[s - 1];
    std::vector<std::vector<Scalar>> d(faces[s].size(), std::vector<Scalar>(lower.size(), field.zero()));
    for (std::size_t f = 0; f < faces[s].size(); ++f) {
      std::uint64_t face = faces[s][f];
      int position = 0;
      for (std::uint64_t rest = face; rest != 0; rest &= rest - 1) {
        std::uint64_t bit = rest & -rest;
        auto it = std::lower_bound(lower.begin(), lower.end(), face & ~bit);
        d[f][static_cast<std::size_t>(it - lower.begin())] =
            position % 2 == 0 ? field.one() : field.neg(field.one());
        ++position;
      }
    }
    rank[s] = matrix_rank(field, std::move(d));
  }
  // H~ in dimension s-1 for faces of size s.
  std::vector<std::uint64_t> h(top, 0);
  for (std::size_t s = 0; s < top; ++s) {
    h[s] = faces[s].size() - rank[s] - rank[s + 1];
  }
  return h;
}

}  // namespace

std::map<std::pair<int, int>, std::uint64_t> BettiTable::coarse() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, count] : fine) {
    int deg = 0;
    for (int x : key.second) deg += x;
    out[{key.first, deg}] += count;
  }
  return out;
}

std::map<std::pair<int, MultiDegree>, std::uint64_t> BettiTable::by_block(const Grading& grading) const {
  std::map<std::pair<int, MultiDegree>, std::uint64_t> out;
  for (const auto& [key, count] : fine) {
    Monomial u{std::vector<std::int32_t>(key.second.begin(), key.second.end())};
    out[{key.first, grading.degree(u)}] += count;
  }
  return out;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (const auto& [key, count] : fine) {
    if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1, 0);
    out[key.first] += count;
  }
  return out;
}

BettiTable betti_table(const MonomialIdeal& m, std::size_t max_generators) {
  if (m.size() > max_generators) {
    throw Error(ErrorKind::kGuardrail, "Betti computation limited to " + std::to_string(max_generators) +
                                           " generators");
  }
  const Ring& ring = m.ring();
  if (ring.num_vars() > 64) throw Error(ErrorKind::kInvalidArgument, "at most 64 variables supported here");
  BettiTable table;
  std::vector<int> zero(ring.num_vars(), 0);
  table.fine[{0, zero}] = 1;
  if (m.is_zero()) return table;

  std::set<Monomial> lattice(m.generators().begin(), m.generators().end());
  std::vector<Monomial> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& u : frontier) {
      for (const auto& g : m.generators()) {
        Monomial l = u.lcm(g);
        if (lattice.insert(l).second) next.push_back(std::move(l));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& b : lattice) {
    std::vector<std::size_t> support = b.support();
    std::vector<std::vector<std::uint64_t>> faces{{0}};
    for (;;) {
      std::set<std::uint64_t> bigger;
      for (auto f : faces.back()) {
        for (auto v : support) {
          std::uint64_t bit = std::uint64_t{1} << v;
          if (f & bit) continue;
          std::uint64_t g = f | bit;
          if (bigger.count(g)) continue;
          Monomial q = b;
          for (auto w : support) {
            if (g >> w & 1) q.set(w, q[w] - 1);
          }
          if (m.contains(q)) bigger.insert(g);
        }
      }
      if (bigger.empty()) break;
      faces.emplace_back(bigger.begin(), bigger.end());
    }
    auto h = reduced_homology(ring.field(), faces);
    std::vector<int> key(b.exponents().begin(), b.exponents().end());
    for (std::size_t s = 0; s < h.size(); ++s) {
      // H~ in dimension s-1 contributes to beta_{s+1}.
      if (h[s] != 0) table.fine[{static_cast<int>(s) + 1, key}] = h[s];
    }
  }
  return table;
}

bool has_linear_resolution(const MonomialIdeal& m) {
  if (m.is_zero()) return true;
  int d = m.generators().front().degree();
  for (const auto& g : m.generators()) {
    if (g.degree() != d) return false;
  }
  for (const auto& [key, count] : betti_table(m).coarse()) {
    if (key.first >= 1 && count != 0 && key.second != d + key.first - 1) return false;
  }
  return true;
}

int projective_dimension(const MonomialIdeal& m) {
  if (m.is_zero()) throw Error(ErrorKind::kInvalidArgument, "zero ideal has no resolution");
  return static_cast<int>(betti_table(m).totals().size()) - 2;
}

std::vector<std::uint64_t> eagon_northcott_ranks(int m, int n) {
  if (m < 1 || m > n) throw Error(ErrorKind::kInvalidArgument, "Eagon-Northcott ranks need 1 <= m <= n");
  std::vector<std::uint64_t> out{1};
  for (int k = 0; k <= n - m; ++k) out.push_back(binomial(n, m + k) * binomial(m + k - 1, k));
  return out;
}

bool betti_support_squarefree(const BettiTable& table) {
  for (const auto& [key, count] : table.fine) {
    if (count == 0) continue;
    for (int e : key.second) {
      if (e > 1) return false;
    }
  }
  return true;
}

bool betti_support_bounded(const BettiTable& table, const Grading& grading) {
  MultiDegree ones(grading.num_blocks(), 1);
  for (const auto& [key, count] : table.by_block(grading)) {
    if (count != 0 && !multidegree_leq(key.second, ones)) return false;
  }
  return true;
}

bool betti_support_taylor_bounded(const BettiTable& table, const Grading& grading) {
  for (const auto& [key, count] : table.by_block(grading)) {
    MultiDegree cap(grading.num_blocks(), std::max(key.first, 0));
    if (count != 0 && !multidegree_leq(key.second, cap)) return false;
  }
  return true;
}

}  // namespace detgb
