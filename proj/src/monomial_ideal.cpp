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

#include "detgb/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detgb/error.hpp"

namespace detgb {

namespace {

bool generator_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), generator_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::uint64_t support_mask(const Monomial& m) {
  if (m.size() > 64) throw Error(ErrorKind::kInvalidArgument, "at most 64 variables supported here");
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] != 0) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

Monomial mask_monomial(std::size_t n, std::uint64_t mask) {
  Monomial m(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (mask >> v & 1) m.set(v, 1);
  }
  return m;
}

// Standard monomials of an ideal whose generators mention only `vars`,
// counted inside the polynomial ring on `vars`; nullopt when infinite.
std::optional<std::uint64_t> count_standard(const std::vector<Monomial>& gens,
                                            const std::vector<std::size_t>& vars,
                                            std::size_t num_vars) {
  std::vector<std::int32_t> bound;
  for (auto v : vars) {
    std::int32_t best = -1;
    for (const auto& g : gens) {
      if (g.degree() == g[v] && (best < 0 || g[v] < best)) best = g[v];
    }
    if (best < 0) return std::nullopt;
    bound.push_back(best);
  }
  std::uint64_t count = 0;
  Monomial probe(num_vars);
  for (;;) {
    bool inside = false;
    for (const auto& g : gens) {
      if (g.divides(probe)) {
        inside = true;
        break;
      }
    }
    if (!inside) ++count;
    std::size_t k = 0;
    while (k < vars.size() && probe[vars[k]] + 1 == bound[k]) probe.set(vars[k++], 0);
    if (k == vars.size()) return count;
    probe.set(vars[k], probe[vars[k]] + 1);
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens) {
    if (g.size() != ring_->num_vars()) {
      throw Error(ErrorKind::kInvalidArgument, "monomial size does not match ring");
    }
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  Monomial one = ring->one();
  return MonomialIdeal(std::move(ring), {one});
}

MonomialIdeal MonomialIdeal::prime(RingPtr ring, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens;
  for (auto v : vars) gens.push_back(ring->variable(v));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

int MonomialIdeal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.lcm(m) / m);
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::with(const Monomial& m) const {
  std::vector<Monomial> out = gens_;
  out.push_back(m);
  return MonomialIdeal(ring_, std::move(out));
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(ring_->to_string(g));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += ring_->to_string(gens_[i]);
  }
  return out + ")";
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(u.lcm(v));
  }
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

bool is_radical(const MonomialIdeal& m) {
  return std::all_of(m.generators().begin(), m.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal radical(const MonomialIdeal& m) {
  std::vector<Monomial> gens;
  for (const auto& g : m.generators()) gens.push_back(g.squarefree_part());
  return MonomialIdeal(m.ring_ptr(), std::move(gens));
}

bool is_borel_fixed(const MonomialIdeal& m) {
  const Grading& g = m.ring().grading();
  for (const auto& u : m.generators()) {
    for (std::size_t v = 0; v < u.size(); ++v) {
      if (u[v] == 0 || g.position(v) == 0) continue;
      std::size_t prev = g.block_members(g.block_of(v))[g.position(v) - 1];
      Monomial moved = u;
      moved.set(v, u[v] - 1);
      moved.set(prev, u[prev] + 1);
      if (!m.contains(moved)) return false;
    }
  }
  return true;
}

MonomialIdeal borel_closure(const RingPtr& ring, const std::vector<Monomial>& monomials) {
  const Grading& g = ring->grading();
  std::set<Monomial> seen(monomials.begin(), monomials.end());
  std::vector<Monomial> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    Monomial u = std::move(stack.back());
    stack.pop_back();
    for (std::size_t v = 0; v < u.size(); ++v) {
      if (u[v] == 0 || g.position(v) == 0) continue;
      std::size_t prev = g.block_members(g.block_of(v))[g.position(v) - 1];
      Monomial moved = u;
      moved.set(v, u[v] - 1);
      moved.set(prev, u[prev] + 1);
      if (seen.insert(moved).second) stack.push_back(std::move(moved));
    }
  }
  return MonomialIdeal(ring, {seen.begin(), seen.end()});
}

MonomialIdeal variable_prime_ideal(const RingPtr& ring, const VariablePrime& p) {
  const Grading& g = ring->grading();
  if (static_cast<int>(p.b.size()) != g.num_blocks()) {
    throw Error(ErrorKind::kInvalidArgument, "P_b needs one entry per block");
  }
  std::vector<std::size_t> vars;
  for (int i = 0; i < g.num_blocks(); ++i) {
    const auto& members = g.block_members(i);
    if (p.b[i] < 0 || p.b[i] > static_cast<int>(members.size())) {
      throw Error(ErrorKind::kInvalidArgument, "P_b entry outside its block");
    }
    for (int k = 0; k < p.b[i]; ++k) vars.push_back(members[k]);
  }
  return MonomialIdeal::prime(ring, vars);
}

std::optional<VariablePrime> as_variable_prime(const MonomialIdeal& prime) {
  const Grading& g = prime.ring().grading();
  std::vector<bool> in(prime.ring().num_vars(), false);
  for (const auto& gen : prime.generators()) {
    if (gen.degree() != 1) return std::nullopt;
    in[gen.support().front()] = true;
  }
  VariablePrime p{MultiDegree(g.num_blocks(), 0)};
  for (int i = 0; i < g.num_blocks(); ++i) {
    const auto& members = g.block_members(i);
    int count = 0;
    while (count < static_cast<int>(members.size()) && in[members[count]]) ++count;
    for (std::size_t k = count; k < members.size(); ++k) {
      if (in[members[k]]) return std::nullopt;
    }
    p.b[i] = count;
  }
  return p;
}

std::vector<VariablePrime> all_variable_primes(const Ring& ring) {
  const Grading& g = ring.grading();
  std::vector<VariablePrime> out{{MultiDegree()}};
  for (int i = 0; i < g.num_blocks(); ++i) {
    std::vector<VariablePrime> next;
    for (const auto& p : out) {
      for (int k = 0; k <= static_cast<int>(g.block_members(i).size()); ++k) {
        VariablePrime q = p;
        q.b.push_back(k);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& sets) {
  // Recursive splitting on the elements of the first set not yet hit.
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> memo;
  auto solve = [&](auto&& self, std::vector<std::uint64_t> family) -> std::vector<std::uint64_t> {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty()) return {0};
    if (family.front() == 0) return {};
    auto it = memo.find(family);
    if (it != memo.end()) return it->second;
    std::uint64_t pivot = family.front();
    for (auto s : family) {
      if (__builtin_popcountll(s) < __builtin_popcountll(pivot)) pivot = s;
    }
    std::vector<std::uint64_t> found;
    for (std::uint64_t rest = pivot; rest != 0; rest &= rest - 1) {
      std::uint64_t bit = rest & -rest;
      std::vector<std::uint64_t> remaining;
      for (auto s : family) {
        if ((s & bit) == 0) remaining.push_back(s);
      }
      for (auto t : self(self, std::move(remaining))) found.push_back(t | bit);
    }
    std::sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<std::uint64_t> minimal;
    for (auto t : found) {
      bool dominated = false;
      for (auto u : minimal) {
        if ((u & t) == u) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(t);
    }
    memo.emplace(family, minimal);
    return minimal;
  };
  return solve(solve, sets);
}

std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& m) {
  if (m.is_unit()) return {};
  std::vector<std::uint64_t> supports;
  for (const auto& g : m.generators()) supports.push_back(support_mask(g));
  std::vector<MonomialIdeal> out;
  for (auto t : minimal_transversals(supports)) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < m.ring().num_vars(); ++v) {
      if (t >> v & 1) vars.push_back(v);
    }
    out.push_back(MonomialIdeal::prime(m.ring_ptr(), vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t monomial_codimension(const MonomialIdeal& m) {
  if (m.is_unit()) throw Error(ErrorKind::kInvalidArgument, "unit ideal has no codimension");
  if (m.is_zero()) return 0;
  std::size_t best = m.ring().num_vars();
  for (const auto& p : minimal_primes(m)) best = std::min(best, p.size());
  return best;
}

std::optional<std::uint64_t> localized_length(const MonomialIdeal& m, const MonomialIdeal& prime) {
  require_same_ring(m.ring(), prime.ring());
  std::vector<bool> in(m.ring().num_vars(), false);
  std::vector<std::size_t> vars;
  for (const auto& g : prime.generators()) {
    if (g.degree() != 1) throw Error(ErrorKind::kInvalidArgument, "prime must be generated by variables");
    std::size_t v = g.support().front();
    in[v] = true;
    vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  std::vector<Monomial> restricted;
  for (const auto& g : m.generators()) {
    Monomial r = g;
    for (std::size_t v = 0; v < r.size(); ++v) {
      if (!in[v]) r.set(v, 0);
    }
    restricted.push_back(std::move(r));
  }
  MonomialIdeal local(m.ring_ptr(), std::move(restricted));
  if (local.is_unit()) return 0;
  return count_standard(local.generators(), vars, m.ring().num_vars());
}

MonomialIdeal alexander_dual(const MonomialIdeal& m) {
  if (!is_radical(m)) throw Error(ErrorKind::kInvalidArgument, "Alexander dual needs a squarefree ideal");
  std::vector<std::uint64_t> supports;
  for (const auto& g : m.generators()) supports.push_back(support_mask(g));
  std::vector<Monomial> gens;
  for (auto t : minimal_transversals(supports)) gens.push_back(mask_monomial(m.ring().num_vars(), t));
  return MonomialIdeal(m.ring_ptr(), std::move(gens));
}

Polarization polarize(const MonomialIdeal& m) {
  const Ring& ring = m.ring();
  std::vector<int> copies(ring.num_vars(), 1);
  for (const auto& g : m.generators()) {
    for (std::size_t v = 0; v < g.size(); ++v) copies[v] = std::max(copies[v], g[v]);
  }
  std::vector<std::string> names;
  std::vector<int> blocks;
  std::vector<std::pair<std::size_t, int>> origin;
  std::vector<std::size_t> first(ring.num_vars());
  for (std::size_t v = 0; v < ring.num_vars(); ++v) {
    first[v] = names.size();
    for (int k = 1; k <= copies[v]; ++k) {
      names.push_back(ring.name(v) + "_" + std::to_string(k));
      blocks.push_back(ring.grading().block_of(v));
      origin.emplace_back(v, k);
    }
  }
  RingPtr target = Ring::make(std::move(names), ring.field(),
                              Grading::from_blocks(std::move(blocks), ring.grading().num_blocks()));
  std::vector<Monomial> gens;
  for (const auto& g : m.generators()) {
    Monomial p = target->one();
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (int k = 0; k < g[v]; ++k) p.set(first[v] + k, 1);
    }
    gens.push_back(std::move(p));
  }
  return Polarization{MonomialIdeal(target, std::move(gens)), std::move(origin)};
}

MonomialIdeal borel_reconstruction(const MonomialIdeal& m) {
  const Ring& ring = m.ring();
  const Grading& g = ring.grading();
  int blocks = g.num_blocks();
  std::vector<std::string> names;
  for (int i = 0; i < blocks; ++i) names.push_back("y_" + std::to_string(i + 1));
  std::vector<int> block_of(blocks);
  for (int i = 0; i < blocks; ++i) block_of[i] = i;
  RingPtr small = Ring::make(names, ring.field(), Grading::from_blocks(block_of, blocks));
  std::vector<Monomial> j_gens;
  for (const auto& p : minimal_primes(m)) {
    auto b = as_variable_prime(p);
    if (!b) throw Error(ErrorKind::kPrecondition, "minimal prime is not of the form P_b");
    j_gens.push_back(Monomial(std::vector<std::int32_t>(b->b.begin(), b->b.end())));
  }
  Polarization pol = polarize(MonomialIdeal(small, std::move(j_gens)));
  std::vector<std::uint64_t> supports;
  for (const auto& gen : pol.ideal.generators()) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < gen.size(); ++v) {
      if (gen[v] == 0) continue;
      auto [block, copy] = pol.origin[v];
      const auto& members = g.block_members(static_cast<int>(block));
      if (copy > static_cast<int>(members.size())) {
        throw Error(ErrorKind::kPrecondition, "polarization exceeds block size");
      }
      mask |= std::uint64_t{1} << members[copy - 1];
    }
    supports.push_back(mask);
  }
  std::vector<Monomial> gens;
  for (auto t : minimal_transversals(supports)) gens.push_back(mask_monomial(ring.num_vars(), t));
  return MonomialIdeal(m.ring_ptr(), std::move(gens));
}

MonomialIdeal predicted_gin_row(int m, int n, const Field& field) {
  if (m < 1 || m > n) throw Error(ErrorKind::kInvalidArgument, "predicted row gin needs 1 <= m <= n");
  RingPtr ring = matrix_ring(m, n, MatrixGrading::kRow, field);
  std::vector<Monomial> gens;
  std::vector<int> j(m, 1);
  for (;;) {
    int sum = 0;
    for (int x : j) sum += x;
    if (sum <= n) {
      Monomial u = ring->one();
      for (int i = 0; i < m; ++i) u.set(static_cast<std::size_t>(i * n + j[i] - 1), 1);
      gens.push_back(std::move(u));
    }
    int k = m - 1;
    while (k >= 0 && j[k] == n) j[k--] = 1;
    if (k < 0) break;
    ++j[k];
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detgb
