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

#include "graphstab/subspace.hpp"

#include <string>
#include <utility>

#include "graphstab/errors.hpp"

namespace graphstab {
namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw UsageError("subspaces over different fields");
  if (a.ambient_dim() != b.ambient_dim()) {
    throw UsageError("subspaces of F^" + std::to_string(a.ambient_dim()) + " and F^" +
                     std::to_string(b.ambient_dim()) + " are not comparable");
  }
}

}  // namespace

Subspace::Subspace(Field field, std::size_t ambient_dim)
    : field_(field), ambient_dim_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace::Subspace(Field field, std::size_t ambient_dim, Matrix basis,
                   std::vector<std::size_t> pivots)
    : field_(field), ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span_of_rows(const Matrix& rows) {
  auto [reduced, pivots] = rref(rows);
  Matrix basis = submatrix(reduced, 0, 0, pivots.size(), rows.cols());
  return Subspace(rows.field(), rows.cols(), std::move(basis), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return span_of_rows(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  return span_of_rows(Matrix::identity(field, ambient_dim));
}

Vector Subspace::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector(r.begin(), r.end());
}

Vector Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient_dim_) throw UsageError("vector length does not match ambient space");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem factor = out[pivots_[i]];
    if (factor == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      out[c] = field_.sub(out[c], field_.mul(factor, row[c]));
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  for (Elem e : reduce(v)) {
    if (e != 0) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) throw UsageError("vector is not in the subspace");
  Vector coords(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

std::vector<Vector> Subspace::elements() const {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 20;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    count *= field_.p();
    if (count > kLimit) {
      throw SizeLimitError("refusing to enumerate more than 2^20 subspace elements");
    }
  }
  std::vector<Vector> out;
  out.reserve(count);
  Vector coeff(dim(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vector v(ambient_dim_, 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coeff[i] == 0) continue;
      auto row = basis_.row(i);
      for (std::size_t c = 0; c < ambient_dim_; ++c) {
        v[c] = field_.add(v[c], field_.mul(coeff[i], row[c]));
      }
    }
    out.push_back(std::move(v));
    for (std::size_t i = dim(); i-- > 0;) {
      if (++coeff[i] < field_.p()) break;
      coeff[i] = 0;
    }
  }
  return out;
}

Subspace kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(reduced(i, free));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vectors);
}

Subspace image_basis(const Matrix& m) { return Subspace::span_of_rows(transpose(m)); }

Subspace ortho_complement(const Subspace& s) { return kernel_basis(s.basis()); }

bool contains(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!a.contains(b.basis().row(i))) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return Subspace::span_of_rows(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return ortho_complement(sum(ortho_complement(a), ortho_complement(b)));
}

Subspace coordinate_subspace(Field field, std::size_t ambient_dim,
                             const std::vector<std::size_t>& indices) {
  std::vector<Vector> vectors;
  for (auto idx : indices) {
    if (idx >= ambient_dim) throw UsageError("coordinate index out of range");
    Vector v(ambient_dim, 0);
    v[idx] = 1;
    vectors.push_back(std::move(v));
  }
  return Subspace::span(field, ambient_dim, vectors);
}

Matrix projection_onto(const Subspace& target, const Subspace& within) {
  require_compatible(target, within);
  if (!contains(within, target)) throw UsageError("projection target is not inside `within`");
  // v = sum_i v[pivot_i] t_i + (part on non-pivot coordinates), so
  // P = sum_i t_i e_{pivot_i}^T.
  const std::size_t n = target.ambient_dim();
  Matrix p(target.field(), n, n);
  for (std::size_t i = 0; i < target.dim(); ++i) {
    const auto col = target.pivots()[i];
    for (std::size_t r = 0; r < n; ++r) p.set(r, col, target.basis()(i, r));
  }
  return p;
}

Matrix projection_along(const Subspace& target, const Subspace& complement) {
  require_compatible(target, complement);
  const std::size_t n = target.ambient_dim();
  if (target.dim() + complement.dim() != n || !intersect(target, complement).is_zero()) {
    throw UsageError("projection_along: spaces are not complementary");
  }
  // P = M diag(I_r, 0) M^-1 with M = [target basis | complement basis].
  const Matrix m = hstack(target.basis_columns(), complement.basis_columns());
  Matrix selector(target.field(), n, n);
  for (std::size_t i = 0; i < target.dim(); ++i) selector.set(i, i, 1);
  return multiply(multiply(m, selector), inverse(m));
}

Matrix quotient_representatives(const Subspace& big, const Subspace& small) {
  require_compatible(big, small);
  if (!contains(big, small)) throw UsageError("quotient: small space is not inside big space");
  std::vector<Vector> reduced;
  reduced.reserve(big.dim());
  for (std::size_t i = 0; i < big.dim(); ++i) reduced.push_back(small.reduce(big.basis().row(i)));
  const Subspace reps = Subspace::span(big.field(), big.ambient_dim(), reduced);
  return reps.basis_columns();
}

}  // namespace graphstab
