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

#ifndef DETGB_RING_HPP_
#define DETGB_RING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detgb/field.hpp"

namespace detgb {

using MultiDegree = std::vector<int>;

// Component-wise a <= b.
bool multidegree_leq(const MultiDegree& a, const MultiDegree& b);

// Dense exponent vector over the ring's variables. Exponents are non-negative;
// variables with exponent zero carry no information beyond their position.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  static Monomial variable(std::size_t num_vars, std::size_t var, std::int32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::int32_t>& exponents() const { return exps_; }
  void set(std::size_t i, std::int32_t e) { exps_[i] = e; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const;
  // Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial squarefree_part() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::int32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Degree-reverse-lexicographic comparison with the first variable largest.
// This is the canonical presentation order; term orders live in term_order.hpp.
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b);

// Assigns every variable one standard basis vector e_b of Z^m. Within a block
// the variables are ordered by declaration; that order drives Borel moves.
class Grading {
 public:
  Grading() = default;
  static Grading standard(std::size_t num_vars);
  static Grading from_blocks(std::vector<int> block_of, int num_blocks);

  std::size_t num_vars() const { return block_of_.size(); }
  int num_blocks() const { return num_blocks_; }
  int block_of(std::size_t var) const { return block_of_[var]; }
  // 0-based position of the variable inside its block.
  int position(std::size_t var) const { return position_[var]; }
  const std::vector<std::size_t>& block_members(int block) const { return members_[block]; }

  MultiDegree degree(const Monomial& m) const;
  MultiDegree zero_degree() const { return MultiDegree(num_blocks_, 0); }

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.num_blocks_ == b.num_blocks_ && a.block_of_ == b.block_of_;
  }

 private:
  int num_blocks_ = 0;
  std::vector<int> block_of_;
  std::vector<int> position_;
  std::vector<std::vector<std::size_t>> members_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable names, coefficient field and multigrading. Rings are immutable and
// shared; equality is structural.
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field, Grading grading);

  static RingPtr make(std::vector<std::string> names, Field field, Grading grading);
  static RingPtr make(std::vector<std::string> names, Field field);

  std::size_t num_vars() const { return names_.size(); }
  const std::string& name(std::size_t var) const { return names_[var]; }
  const std::vector<std::string>& names() const { return names_; }
  const Field& field() const { return field_; }
  const Grading& grading() const { return grading_; }

  // Exact name lookup; "xIJ" is also accepted for "x_I_J" when I and J are
  // single digits.
  std::optional<std::size_t> find(std::string_view name) const;

  // 1-based (row, column) for variables named x_<row>_<col>.
  std::optional<std::pair<int, int>> cell(std::size_t var) const { return cells_[var]; }

  std::string to_string(const Monomial& m) const;
  Monomial one() const { return Monomial(num_vars()); }
  Monomial variable(std::size_t var) const { return Monomial::variable(num_vars(), var); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.field_ == b.field_ && a.grading_ == b.grading_;
  }

 private:
  std::vector<std::string> names_;
  Field field_;
  Grading grading_;
  std::vector<std::optional<std::pair<int, int>>> cells_;
};

// Throws ErrorKind::kRingMismatch unless the rings are equal.
void require_same_ring(const Ring& a, const Ring& b);

enum class MatrixGrading { kNone, kColumn, kRow };

// Variables x_i_j (1 <= i <= rows, 1 <= j <= cols) in row-major order.
// kColumn puts x_i_j in block j, kRow puts it in block i.
RingPtr matrix_ring(int rows, int cols, MatrixGrading grading, const Field& field);

std::string_view grading_name(MatrixGrading g);
MatrixGrading parse_grading(std::string_view name);

}  // namespace detgb

#endif  // DETGB_RING_HPP_
