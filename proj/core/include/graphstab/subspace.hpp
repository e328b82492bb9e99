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

#ifndef GRAPHSTAB_SUBSPACE_HPP_
#define GRAPHSTAB_SUBSPACE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "graphstab/field.hpp"
#include "graphstab/matrix.hpp"

namespace graphstab {

/// A linear subspace of F^n held as its RREF row basis (zero rows dropped).
///
/// The RREF basis is canonical, so equality is entry-wise comparison of bases.
class Subspace {
 public:
  /// The zero subspace of F^ambient_dim.
  Subspace(Field field, std::size_t ambient_dim);

  /// Span of the rows of `rows` (any form; canonicalized).
  static Subspace span_of_rows(const Matrix& rows);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(Field field, std::size_t ambient_dim);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  /// dim() x ambient_dim() matrix in RREF.
  const Matrix& basis() const noexcept { return basis_; }
  /// ambient_dim() x dim() matrix whose columns are the basis vectors.
  Matrix basis_columns() const { return transpose(basis_); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const;

  /// Subtracts basis multiples so every pivot coordinate of v becomes zero.
  /// The result is zero iff v lies in the subspace.
  Vector reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  /// Coordinates of v in the RREF basis. Throws UsageError when v is not in the span.
  Vector coordinates(std::span<const Elem> v) const;

  /// All p^dim elements, lexicographic in the basis coordinates.
  /// Refuses (SizeLimitError) beyond 2^20 elements.
  std::vector<Vector> elements() const;

  bool operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
  }

 private:
  Subspace(Field field, std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots);

  Field field_;
  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m·v = 0}
Subspace kernel_basis(const Matrix& m);
/// Column space of m.
Subspace image_basis(const Matrix& m);
/// {v : v·w = 0 for all w in s}
Subspace ortho_complement(const Subspace& s);

/// True iff b ⊆ a.
bool contains(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Span of the standard basis vectors e_j for j in `indices`.
Subspace coordinate_subspace(Field field, std::size_t ambient_dim,
                             const std::vector<std::size_t>& indices);

/// Idempotent n×n P with image `target`, whose kernel is spanned by the
/// standard basis vectors at the non-pivot columns of target's RREF.
/// Requires target ⊆ within (UsageError otherwise).
Matrix projection_onto(const Subspace& target, const Subspace& within);

/// Idempotent P with image `target` and kernel `complement`. The two spaces
/// must be complementary in F^n (UsageError otherwise).
Matrix projection_along(const Subspace& target, const Subspace& complement);

/// Columns form a basis of representatives of big/small: each big basis
/// vector has the pivot coordinates of small zeroed, then the survivors are
/// put in RREF. Requires small ⊆ big.
Matrix quotient_representatives(const Subspace& big, const Subspace& small);

}  // namespace graphstab

#endif  // GRAPHSTAB_SUBSPACE_HPP_
