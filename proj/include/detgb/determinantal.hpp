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

#ifndef DETGB_DETERMINANTAL_HPP_
#define DETGB_DETERMINANTAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "detgb/polynomial.hpp"

namespace detgb {

enum class MatrixMode { kVariables, kColumnGraded, kRowGraded, kExplicit };

std::string_view mode_name(MatrixMode mode);

// An m x n matrix of linear forms over a matrix ring (see matrix_ring) or,
// in explicit mode, over any ring.
class LinearMatrix {
 public:
  // Validates shape, linearity and, for graded modes, that every entry lies
  // in the right block.
  LinearMatrix(RingPtr ring, MatrixMode mode, std::vector<std::vector<Polynomial>> entries);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  MatrixMode mode() const { return mode_; }
  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return entries_.empty() ? 0 : static_cast<int>(entries_.front().size()); }
  const Polynomial& entry(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<Polynomial>>& entries() const { return entries_; }

  LinearMatrix with_rows_swapped(int a, int b) const;
  bool has_zero_column() const;

 private:
  RingPtr ring_;
  MatrixMode mode_;
  std::vector<std::vector<Polynomial>> entries_;
};

// Entry (i, j) is x_i_j.
LinearMatrix variable_matrix(int m, int n, const Field& field,
                             MatrixGrading grading = MatrixGrading::kNone);
// Entry (i, j) = sum_k lambda_ijk x_k_j with nonzero random lambda.
LinearMatrix generic_column_graded(int m, int n, const Field& field, std::uint64_t seed);
// Entry (i, j) = sum_k lambda_ijk x_i_k (k = 1..n) with nonzero random lambda.
LinearMatrix generic_row_graded(int m, int n, const Field& field, std::uint64_t seed);
// Parses entry strings in the given ring.
LinearMatrix parse_matrix(const RingPtr& ring, MatrixMode mode,
                          const std::vector<std::vector<std::string>>& entries);

struct Minor {
  std::vector<int> columns;  // 1-based, increasing
  Polynomial value;
};

// All C(n, m) maximal minors in lexicographic column order, zero ones
// included. Throws kInvalidArgument when m > n.
std::vector<Minor> maximal_minors(const LinearMatrix& l);
std::vector<Polynomial> nonzero_minor_values(const std::vector<Minor>& minors);

// Scalar m x n matrix whose maximal minors are all nonzero.
class SpecializationMatrix {
 public:
  static SpecializationMatrix from_values(const Field& field, std::vector<std::vector<Scalar>> a);
  // At most five seeded draws; throws kPrecondition if all fail.
  static SpecializationMatrix random(int m, int n, const Field& field, std::uint64_t seed);

  const Field& field() const { return field_; }
  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return static_cast<int>(a_.front().size()); }
  const Scalar& at(int i, int j) const { return a_[i][j]; }
  // Determinant of the columns (1-based).
  Scalar minor(const std::vector<int>& columns) const;
  int attempts() const { return attempts_; }

 private:
  SpecializationMatrix(Field field, std::vector<std::vector<Scalar>> a) : field_(field), a_(std::move(a)) {}
  Field field_;
  std::vector<std::vector<Scalar>> a_;
  int attempts_ = 1;
};

// The ring K[y_1..y_n] with the standard grading.
RingPtr phi_target_ring(int n, const Field& field);

// Substitutes x_i_j -> a_ij * y_j.
std::vector<Polynomial> specialize_phi(const std::vector<Polynomial>& polys,
                                       const SpecializationMatrix& a);

// Matrix determinant over the field (Gaussian elimination).
Scalar determinant(const Field& field, std::vector<std::vector<Scalar>> a);

// Increasing m-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> column_subsets(int n, int m);

}  // namespace detgb

#endif  // DETGB_DETERMINANTAL_HPP_
