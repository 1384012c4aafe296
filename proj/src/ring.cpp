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

#include "detgb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "detgb/error.hpp"

namespace detgb {

bool multidegree_leq(const MultiDegree& a, const MultiDegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw Error(ErrorKind::kInvalidArgument, "negative exponent");
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, std::int32_t power) {
  Monomial m(num_vars);
  m.exps_[var] = power;
  return m;
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0) {
      throw Error(ErrorKind::kInvalidArgument, "monomial quotient is not a monomial");
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  }
  return r;
}

Monomial Monomial::squarefree_part() const {
  Monomial r(*this);
  for (auto& e : r.exps_) e = e > 0 ? 1 : 0;
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

Grading Grading::standard(std::size_t num_vars) {
  return from_blocks(std::vector<int>(num_vars, 0), 1);
}

Grading Grading::from_blocks(std::vector<int> block_of, int num_blocks) {
  if (num_blocks < 1) {
    throw Error(ErrorKind::kInvalidArgument, "a grading needs at least one block");
  }
  Grading g;
  g.num_blocks_ = num_blocks;
  g.members_.assign(num_blocks, {});
  g.position_.assign(block_of.size(), 0);
  for (std::size_t v = 0; v < block_of.size(); ++v) {
    int b = block_of[v];
    if (b < 0 || b >= num_blocks) {
      throw Error(ErrorKind::kInvalidArgument, "variable assigned to a missing grading block");
    }
    g.position_[v] = static_cast<int>(g.members_[b].size());
    g.members_[b].push_back(v);
  }
  g.block_of_ = std::move(block_of);
  return g;
}

MultiDegree Grading::degree(const Monomial& m) const {
  MultiDegree d(num_blocks_, 0);
  for (std::size_t v = 0; v < m.size(); ++v) d[block_of_[v]] += m[v];
  return d;
}

namespace {

std::optional<int> parse_index(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) return std::nullopt;
  return v;
}

std::optional<std::pair<int, int>> parse_cell(std::string_view name) {
  if (name.size() < 5 || name.substr(0, 2) != "x_") return std::nullopt;
  auto rest = name.substr(2);
  auto sep = rest.find('_');
  if (sep == std::string_view::npos) return std::nullopt;
  auto i = parse_index(rest.substr(0, sep));
  auto j = parse_index(rest.substr(sep + 1));
  if (!i || !j) return std::nullopt;
  return std::make_pair(*i, *j);
}

}  // namespace

Ring::Ring(std::vector<std::string> names, Field field, Grading grading)
    : names_(std::move(names)), field_(field), grading_(std::move(grading)) {
  if (grading_.num_vars() != names_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "grading size does not match variable count");
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInvalidArgument, "duplicate variable name");
  }
  cells_.reserve(names_.size());
  for (const auto& n : names_) cells_.push_back(parse_cell(n));
}

RingPtr Ring::make(std::vector<std::string> names, Field field, Grading grading) {
  return std::make_shared<const Ring>(std::move(names), field, std::move(grading));
}

RingPtr Ring::make(std::vector<std::string> names, Field field) {
  Grading g = Grading::standard(names.size());
  return make(std::move(names), field, std::move(g));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  if (name.size() == 3 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1])) &&
      std::isdigit(static_cast<unsigned char>(name[2]))) {
    std::string full = std::string("x_") + name[1] + "_" + name[2];
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == full) return i;
    }
  }
  return std::nullopt;
}

std::string Ring::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[v];
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorKind::kRingMismatch, "operands live in different rings");
  }
}

RingPtr matrix_ring(int rows, int cols, MatrixGrading grading, const Field& field) {
  if (rows < 1 || cols < 1) throw Error(ErrorKind::kInvalidArgument, "matrix dimensions must be positive");
  std::vector<std::string> names;
  std::vector<int> block_of;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
      block_of.push_back(grading == MatrixGrading::kColumn ? j - 1
                         : grading == MatrixGrading::kRow  ? i - 1
                                                           : 0);
    }
  }
  int blocks = grading == MatrixGrading::kColumn ? cols : grading == MatrixGrading::kRow ? rows : 1;
  return Ring::make(std::move(names), field, Grading::from_blocks(std::move(block_of), blocks));
}

std::string_view grading_name(MatrixGrading g) {
  switch (g) {
    case MatrixGrading::kNone:
      return "none";
    case MatrixGrading::kColumn:
      return "column";
    case MatrixGrading::kRow:
      return "row";
  }
  return "none";
}

MatrixGrading parse_grading(std::string_view name) {
  if (name == "none") return MatrixGrading::kNone;
  if (name == "column") return MatrixGrading::kColumn;
  if (name == "row") return MatrixGrading::kRow;
  throw Error(ErrorKind::kParse, "grading must be none, column or row");
}

}  // namespace detgb
