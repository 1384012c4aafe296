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

#include "detgb/determinantal.hpp"

#include <map>

#include "detgb/error.hpp"
#include "detgb/parser.hpp"
#include "detgb/random.hpp"

namespace detgb {

std::string_view mode_name(MatrixMode mode) {
  switch (mode) {
    case MatrixMode::kVariables:
      return "variables";
    case MatrixMode::kColumnGraded:
      return "column-graded";
    case MatrixMode::kRowGraded:
      return "row-graded";
    case MatrixMode::kExplicit:
      return "explicit";
  }
  return "explicit";
}

LinearMatrix::LinearMatrix(RingPtr ring, MatrixMode mode, std::vector<std::vector<Polynomial>> entries)
    : ring_(std::move(ring)), mode_(mode), entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix must have at least one row and column");
  }
  std::size_t n = entries_.front().size();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != n) throw Error(ErrorKind::kInvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& e = entries_[i][j];
      require_same_ring(*ring_, e.ring());
      std::string where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      for (const auto& t : e.terms()) {
        if (t.monomial.degree() != 1) {
          throw Error(ErrorKind::kInvalidArgument, where + " is not a linear form");
        }
        std::size_t v = t.monomial.support().front();
        auto cell = ring_->cell(v);
        if (mode_ == MatrixMode::kExplicit) continue;
        if (!cell) throw Error(ErrorKind::kInvalidArgument, where + " uses a variable outside x_i_j");
        if (mode_ == MatrixMode::kColumnGraded && cell->second != static_cast<int>(j + 1)) {
          throw Error(ErrorKind::kInvalidArgument, where + " violates the column grading");
        }
        if (mode_ == MatrixMode::kRowGraded && cell->first != static_cast<int>(i + 1)) {
          throw Error(ErrorKind::kInvalidArgument, where + " violates the row grading");
        }
      }
      if (mode_ == MatrixMode::kVariables) {
        auto v = ring_->find("x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        if (!v || !(e == Polynomial::variable(ring_, *v))) {
          throw Error(ErrorKind::kInvalidArgument, where + " is not the variable x_i_j");
        }
      }
    }
  }
}

LinearMatrix LinearMatrix::with_rows_swapped(int a, int b) const {
  auto e = entries_;
  std::swap(e[a], e[b]);
  MatrixMode mode = mode_ == MatrixMode::kColumnGraded ? mode_ : MatrixMode::kExplicit;
  return LinearMatrix(ring_, mode, std::move(e));
}

bool LinearMatrix::has_zero_column() const {
  for (int j = 0; j < cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < rows(); ++i) zero = zero && entries_[i][j].is_zero();
    if (zero) return true;
  }
  return false;
}

LinearMatrix variable_matrix(int m, int n, const Field& field, MatrixGrading grading) {
  RingPtr ring = matrix_ring(m, n, grading, field);
  std::vector<std::vector<Polynomial>> e(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) e[i].push_back(Polynomial::variable(ring, static_cast<std::size_t>(i * n + j)));
  }
  return LinearMatrix(ring, MatrixMode::kVariables, std::move(e));
}

LinearMatrix generic_column_graded(int m, int n, const Field& field, std::uint64_t seed) {
  RingPtr ring = matrix_ring(m, n, MatrixGrading::kColumn, field);
  KeyedRandom rng(seed);
  std::vector<std::vector<Polynomial>> e(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (int k = 0; k < m; ++k) {
        terms.push_back(Term{ring->variable(static_cast<std::size_t>(k * n + j)),
                             rng.nonzero(field, {1, std::uint64_t(i), std::uint64_t(j), std::uint64_t(k)})});
      }
      e[i].push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  return LinearMatrix(ring, MatrixMode::kColumnGraded, std::move(e));
}

LinearMatrix generic_row_graded(int m, int n, const Field& field, std::uint64_t seed) {
  RingPtr ring = matrix_ring(m, n, MatrixGrading::kRow, field);
  KeyedRandom rng(seed);
  std::vector<std::vector<Polynomial>> e(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (int k = 0; k < n; ++k) {
        terms.push_back(Term{ring->variable(static_cast<std::size_t>(i * n + k)),
                             rng.nonzero(field, {2, std::uint64_t(i), std::uint64_t(j), std::uint64_t(k)})});
      }
      e[i].push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  return LinearMatrix(ring, MatrixMode::kRowGraded, std::move(e));
}

LinearMatrix parse_matrix(const RingPtr& ring, MatrixMode mode,
                          const std::vector<std::vector<std::string>>& entries) {
  std::vector<std::vector<Polynomial>> e;
  for (const auto& row : entries) {
    e.emplace_back();
    for (const auto& text : row) e.back().push_back(parse_poly(text, ring));
  }
  return LinearMatrix(ring, mode, std::move(e));
}

std::vector<std::vector<int>> column_subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < 0 || m > n) return out;
  std::vector<int> c(m);
  for (int k = 0; k < m; ++k) c[k] = k + 1;
  for (;;) {
    out.push_back(c);
    int k = m - 1;
    while (k >= 0 && c[k] == n - m + k + 1) --k;
    if (k < 0) break;
    ++c[k];
    for (int r = k + 1; r < m; ++r) c[r] = c[r - 1] + 1;
  }
  return out;
}

std::vector<Minor> maximal_minors(const LinearMatrix& l) {
  int m = l.rows(), n = l.cols();
  if (m > n) throw Error(ErrorKind::kInvalidArgument, "maximal minors need m <= n");
  if (n > 30) throw Error(ErrorKind::kInvalidArgument, "too many columns");
  // det(rows R, columns C) for |R| = |C| = k, keyed by bitmasks, built by
  // expansion along the last column of C.
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> prev, cur;
  prev.emplace(std::make_pair(0u, 0u), Polynomial::constant(l.ring_ptr(), l.ring().field().one()));
  for (int k = 1; k <= m; ++k) {
    cur.clear();
    for (const auto& rows : column_subsets(m, k)) {
      std::uint32_t rmask = 0;
      for (int r : rows) rmask |= 1u << (r - 1);
      for (const auto& cols : column_subsets(n, k)) {
        std::uint32_t cmask = 0;
        for (int c : cols) cmask |= 1u << (c - 1);
        int last = cols.back() - 1;
        std::uint32_t csub = cmask & ~(1u << last);
        Polynomial acc(l.ring_ptr());
        for (int p = 0; p < k; ++p) {
          int r = rows[p] - 1;
          const Polynomial& e = l.entry(r, last);
          if (e.is_zero()) continue;
          const Polynomial& sub = prev.at({rmask & ~(1u << r), csub});
          if (sub.is_zero()) continue;
          Polynomial term = e * sub;
          acc = ((p + k - 1) % 2 == 0) ? acc + term : acc - term;
        }
        cur.emplace(std::make_pair(rmask, cmask), std::move(acc));
      }
    }
    std::swap(prev, cur);
  }
  std::vector<Minor> out;
  std::uint32_t all_rows = (m == 32) ? ~0u : ((1u << m) - 1);
  for (const auto& cols : column_subsets(n, m)) {
    std::uint32_t cmask = 0;
    for (int c : cols) cmask |= 1u << (c - 1);
    out.push_back(Minor{cols, prev.at({all_rows, cmask})});
  }
  return out;
}

std::vector<Polynomial> nonzero_minor_values(const std::vector<Minor>& minors) {
  std::vector<Polynomial> out;
  for (const auto& mi : minors) {
    if (!mi.value.is_zero()) out.push_back(mi.value);
  }
  return out;
}

Scalar determinant(const Field& field, std::vector<std::vector<Scalar>> a) {
  std::size_t n = a.size();
  Scalar det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && field.is_zero(a[pivot][c])) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = field.neg(det);
    }
    det = field.mul(det, a[c][c]);
    Scalar inv = field.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(a[r][c])) continue;
      Scalar f = field.mul(a[r][c], inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = field.sub(a[r][k], field.mul(f, a[c][k]));
    }
  }
  return det;
}

Scalar SpecializationMatrix::minor(const std::vector<int>& columns) const {
  std::vector<std::vector<Scalar>> sub(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (int c : columns) sub[i].push_back(a_[i][c - 1]);
  }
  return determinant(field_, std::move(sub));
}

SpecializationMatrix SpecializationMatrix::from_values(const Field& field,
                                                       std::vector<std::vector<Scalar>> a) {
  if (a.empty() || a.front().empty()) throw Error(ErrorKind::kInvalidArgument, "empty scalar matrix");
  for (const auto& row : a) {
    if (row.size() != a.front().size()) throw Error(ErrorKind::kInvalidArgument, "ragged scalar matrix");
    for (const auto& x : row) {
      if (field.is_zero(x)) throw Error(ErrorKind::kInvalidArgument, "specialization entries must be nonzero");
    }
  }
  SpecializationMatrix s(field, std::move(a));
  if (s.rows() > s.cols()) throw Error(ErrorKind::kInvalidArgument, "specialization needs m <= n");
  for (const auto& cols : column_subsets(s.cols(), s.rows())) {
    if (field.is_zero(s.minor(cols))) {
      throw Error(ErrorKind::kInvalidArgument, "specialization matrix has a vanishing maximal minor");
    }
  }
  return s;
}

SpecializationMatrix SpecializationMatrix::random(int m, int n, const Field& field, std::uint64_t seed) {
  KeyedRandom rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<std::vector<Scalar>> a(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        a[i].push_back(rng.nonzero(field, {3, std::uint64_t(attempt), std::uint64_t(i), std::uint64_t(j)}));
      }
    }
    try {
      SpecializationMatrix s = from_values(field, std::move(a));
      s.attempts_ = attempt + 1;
      return s;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::kPrecondition, "no specialization matrix with nonzero minors in 5 attempts");
}

RingPtr phi_target_ring(int n, const Field& field) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("y_" + std::to_string(j));
  return Ring::make(std::move(names), field);
}

std::vector<Polynomial> specialize_phi(const std::vector<Polynomial>& polys,
                                       const SpecializationMatrix& a) {
  RingPtr target = phi_target_ring(a.cols(), a.field());
  const Field& field = a.field();
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    if (!(p.field() == field)) throw Error(ErrorKind::kRingMismatch, "field mismatch in specialization");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Monomial y = target->one();
      Scalar c = t.coeff;
      for (auto v : t.monomial.support()) {
        auto cell = p.ring().cell(v);
        if (!cell || cell->first > a.rows() || cell->second > a.cols()) {
          throw Error(ErrorKind::kInvalidArgument, "shape mismatch between polynomial ring and A");
        }
        for (int e = 0; e < t.monomial[v]; ++e) c = field.mul(c, a.at(cell->first - 1, cell->second - 1));
        y.set(cell->second - 1, y[cell->second - 1] + t.monomial[v]);
      }
      terms.push_back(Term{std::move(y), c});
    }
    out.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return out;
}

}  // namespace detgb
