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

#include "graphstab/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw UsageError("matrices over different fields");
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw UsageError("row " + std::to_string(r) + " has length " +
                       std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw UsageError("ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (Elem e : data_) {
    if (e != 0) return false;
  }
  return true;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m(r, c));
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw UsageError("cannot multiply " + shape(a) + " by " + shape(b));
  }
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      auto orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        orow[j] = f.add(orow[j], f.mul(aik, brow[j]));
      }
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError("cannot add " + shape(a) + " and " + shape(b));
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.field().add(a(r, c), b(r, c)));
  }
  return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError("cannot subtract " + shape(b) + " from " + shape(a));
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.field().sub(a(r, c), b(r, c)));
  }
  return out;
}

bool is_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      if (m(r, c) != m(c, r)) return false;
    }
  }
  return true;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw UsageError("hstack of " + shape(a) + " and " + shape(b));
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw UsageError("vstack of " + shape(a) + " and " + shape(b));
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b(r, c));
  }
  return out;
}

Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t nrows,
                 std::size_t ncols) {
  if (row0 + nrows > m.rows() || col0 + ncols > m.cols()) {
    throw UsageError("submatrix out of range for " + shape(m));
  }
  Matrix out(m.field(), nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) out.set(r, c, m(row0 + r, col0 + c));
  }
  return out;
}

Vector mat_vec(const Matrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) {
    throw UsageError("vector of length " + std::to_string(v.size()) + " does not fit " + shape(m));
  }
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.field(), m.row(r), v);
  return out;
}

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw UsageError("dot product of vectors with different lengths");
  std::uint64_t acc = 0;
  const std::uint64_t p = field.p();
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = (acc + std::uint64_t{a[i]} * b[i]) % p;
  }
  return static_cast<Elem>(acc);
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead) {
      auto r1 = a.row(sel);
      auto r2 = a.row(lead);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const Elem scale = f.inv(a(lead, c));
    auto prow = a.row(lead);
    for (auto& e : prow) e = f.mul(e, scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Elem factor = a(r, c);
      if (factor == 0) continue;
      auto row = a.row(r);
      for (std::size_t k = c; k < a.cols(); ++k) row[k] = f.sub(row[k], f.mul(factor, prow[k]));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("cannot invert non-square " + shape(m));
  const std::size_t n = m.rows();
  auto [reduced, pivots] = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw ValidationError("matrix is singular");
  }
  return submatrix(reduced, 0, n, n, n);
}

}  // namespace graphstab
