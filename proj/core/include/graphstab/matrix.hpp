// Copyright 2026 The graphstab Authors. All Rights Reserved.
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

#ifndef GRAPHSTAB_MATRIX_HPP_
#define GRAPHSTAB_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "graphstab/field.hpp"

namespace graphstab {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over GF(p).
///
/// Every linear operator of the construction (blocks of the graph matrix,
/// projections, lifts) is one of these. Dual spaces are identified with F^n
/// through the dot product, so adjoints are transposes.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Entries are reduced mod p; all rows must have length `cols`.
  static Matrix from_rows(Field field, std::size_t cols,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem value) { data_[r * cols_ + c] = value % field_.p(); }

  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  bool is_zero() const noexcept;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
bool is_symmetric(const Matrix& m);

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// a on top of b.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t nrows,
                 std::size_t ncols);

/// m·v for a column vector v.
Vector mat_vec(const Matrix& m, std::span<const Elem> v);
Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form. Zero rows are kept at the bottom.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Throws ValidationError if m is singular or not square.
Matrix inverse(const Matrix& m);

}  // namespace graphstab

#endif  // GRAPHSTAB_MATRIX_HPP_
