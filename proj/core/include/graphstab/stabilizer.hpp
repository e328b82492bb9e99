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

#ifndef GRAPHSTAB_STABILIZER_HPP_
#define GRAPHSTAB_STABILIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "graphstab/field.hpp"
#include "graphstab/matrix.hpp"
#include "graphstab/subspace.hpp"

namespace graphstab {

/// Weyl label (ĝ | g): a multiplier (phase) part and a shift part, both in F^n.
struct SymplecticVector {
  Vector phase;
  Vector shift;

  std::size_t n() const noexcept { return shift.size(); }
  /// (ĝ₀..ĝₙ₋₁, g₀..gₙ₋₁)
  Vector concatenated() const;
  static SymplecticVector split(std::span<const Elem> v);
  static SymplecticVector zero(std::size_t n) { return {Vector(n, 0), Vector(n, 0)}; }

  bool operator==(const SymplecticVector&) const = default;
};

/// ⟨û, v_shift⟩ − ⟨v̂, u_shift⟩
Elem symplectic_form(const Field& field, const SymplecticVector& u, const SymplecticVector& v);

/// Number of positions y with (ĝ_y, g_y) ≠ (0, 0).
std::size_t weight(const SymplecticVector& v);

/// True iff the symplectic form vanishes on every pair of basis vectors of
/// `s`, a subspace of F^{2n} in (phase | shift) coordinates.
bool is_isotropic(const Subspace& s);

/// An isotropic subspace S ⊂ F^n ⊕ F^n. Construction throws ValidationError
/// when the generators are not isotropic.
class StabilizerSpace {
 public:
  explicit StabilizerSpace(Subspace generators);
  StabilizerSpace(Field field, std::size_t n, const std::vector<Vector>& generators);

  const Field& field() const noexcept { return space_.field(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const Subspace& space() const noexcept { return space_; }
  SymplecticVector generator(std::size_t i) const {
    return SymplecticVector::split(space_.basis().row(i));
  }
  bool contains(const SymplecticVector& v) const { return space_.contains(v.concatenated()); }

  bool operator==(const StabilizerSpace&) const = default;

 private:
  std::size_t n_;
  Subspace space_;
};

/// T = {t : (t | 0) ∈ S}, as a subspace of F^n.
Subspace degenerate_part(const StabilizerSpace& s);

/// {v : ω(v, w) = 0 for all w ∈ S}, a subspace of F^{2n} of dimension 2n − dim S.
Subspace centralizer(const StabilizerSpace& s);

/// p^(n − dim S).
std::uint64_t logical_dim(const StabilizerSpace& s);

/// Largest number of centralizer elements distance_algebraic will enumerate.
inline constexpr std::uint64_t kDistanceSearchLimit = std::uint64_t{1} << 24;

/// Minimum weight over centralizer(S) \ S by exhaustive enumeration in
/// lexicographic coefficient order. When dim S = n there are no logical
/// operators and the minimum weight of a nonzero element of S is returned
/// instead (0 if S = {0} with n = 0). Throws SizeLimitError when
/// p^(2n − dim S) exceeds kDistanceSearchLimit.
std::size_t distance_algebraic(const StabilizerSpace& s);

}  // namespace graphstab

#endif  // GRAPHSTAB_STABILIZER_HPP_
